"""The integer matrices doing the heavy lifting: the conjugator U_n
between the two 2n-dimensional dihedral representations, and the
integer square root V_n of 4E_n + C_n built from the alternating
Catalan series.

Run: python demos/04_appendix_matrices.py
"""

from talex import companion_matrix, theta, u_matrix, v_matrix
from talex.representations import catalan_b, f_value


def show(M, label):
    print(label)
    width = max(len(str(e)) for row in M.entries for e in row) + 1
    for row in M.entries:
        print("   " + "".join(str(e).rjust(width) for e in row))


print("=" * 64)
print("theta_n, the minimal polynomial of omega (Eisenstein at 2n+1)")
print("=" * 64)
for n in (1, 2, 3):
    print(f"theta_{n}(z) =", str(theta(n)).replace("t", "z"))

print()
print("=" * 64)
print("V_n: an integer square root of 4E_n + C_n")
print("=" * 64)
show(v_matrix(3), "V_3 =")
show(companion_matrix(theta(3)), "C_3 =")
V = v_matrix(3)
show(V * V, "V_3^2  (= 4E_3 + C_3):")

print()
print("the bottom row of V_n is the alternating Catalan series:")
print("  ", [catalan_b(k) for k in range(6)])

print()
print("=" * 64)
print("U_n conjugates the printed integer representation onto the")
print("companion-substituted one (certified at construction)")
print("=" * 64)
show(u_matrix(2), "U_2 =")
print("det U_2 =", u_matrix(2).det())

print()
print("the F(n, m) ledger behind the V_n proof:")
print("  F(n, n-1) = 1 and F(n, n) = -(2n-1):",
      [(f_value(n, n - 1), f_value(n, n)) for n in (1, 2, 3, 4)])
