"""Rank stability up the cyclotomic Z2-tower.

When rank A(K) = rank A(K1) and the prime above 2 is totally ramified in
K1/K (automatic for d = 1 mod 4), Fukuda's stability theorem freezes the
rank at every higher layer and forces the Iwasawa mu-invariant to vanish.
predict() attaches exactly that claim; this demo sweeps a range and shows
the congruence patterns behind the stable fields.
"""

from collections import Counter

from twoclass import predict, squarefree_range, stable_rank_type

stable = []
patterns = Counter()
for fs in squarefree_range(3, 4000):
    if fs.value % 2 == 0:
        continue
    report = predict(fs)
    if report.tower is not None and report.tower.rank == 2:
        stable.append(report)
        patterns[report.rank_pattern] += 1

print(f"fields with a rank-2 tower claim below 4000: {len(stable)}")
print("by congruence pattern (None = outside the three patterns):")
for pattern, count in sorted(patterns.items(), key=lambda kv: str(kv[0])):
    print(f"  pattern {pattern}: {count}")
print()

print("the first few, with their flags:")
for report in stable[:8]:
    print(
        f"  d = {report.d:>5} {report.primes}: ranks"
        f" ({report.rank_K.value}, {report.rank_K1.value},"
        f" {report.rank_Kprime.value}), tower {report.tower.to_json()}"
    )
    for flag in report.flags:
        print("     flag:", flag)
print()

print("a type-(1) tension field (prime 1 mod 8 failing the 2-power test):")
report = predict(7345)  # 5 * 13 * 113
print(f"  d = 7345: pattern {stable_rank_type(7345)},"
      f" first-layer rank {report.rank_K1.value}")
for flag in report.flags:
    print("   flag:", flag)
