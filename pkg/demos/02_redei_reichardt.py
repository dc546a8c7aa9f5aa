"""The Redei-Reichardt counts against the form class group oracle.

#S1(D) counts splittings of a fundamental discriminant into two
discriminants and equals #(A+/2A+); #S2(D) keeps the splittings whose
halves are mutual residues and equals #(2A+/4A+).  The table below
recomputes both sides independently for a window of discriminants.
"""

from twoclass import squarefree_range, s1_decompositions, s2_decompositions
from twoclass.forms import class_group_summary

print(f"{'D':>6} {'#S1':>4} {'#A+[2]':>7} {'#S2':>4} {'#A+[4]/#A+[2]':>14} {'h+':>4}")
mism = 0
for fs in squarefree_range(2, 300):
    D = fs.value if fs.value % 4 == 1 else 4 * fs.value
    summ = class_group_summary(D)
    s1 = len(s1_decompositions(D))
    s2 = len(s2_decompositions(D))
    flag = "" if (s1, s2) == (summ.two_torsion_narrow, summ.s2_count) else "  <- MISMATCH"
    mism += bool(flag)
    print(
        f"{D:>6} {s1:>4} {summ.two_torsion_narrow:>7} {s2:>4}"
        f" {summ.s2_count:>14} {summ.h_narrow:>4}{flag}"
    )
print()
print("mismatches:", mism)

# the identity is exact over the whole desk range; spot-check a slice
bad = []
for fs in squarefree_range(300, 3000):
    D = fs.value if fs.value % 4 == 1 else 4 * fs.value
    summ = class_group_summary(D)
    if len(s1_decompositions(D)) != summ.two_torsion_narrow:
        bad.append(D)
    if len(s2_decompositions(D)) != summ.s2_count:
        bad.append(D)
print("exceptions in 300 <= d < 3000:", bad)
