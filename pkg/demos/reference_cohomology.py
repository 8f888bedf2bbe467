# Recompute the cohomology of the four icosahedral tilings and compare with the literature values.
# Run: python demos/reference_cohomology.py         (about half a minute)

from projcoh.cli import RunOptions, run
from projcoh.config import PRESET_NAMES, load_preset

LITERATURE = {
    "danzer": ("Z^7", "Z^16", "Z^20+Z_2", 10),
    "ammann-kramer": ("Z^12", "Z^72+Z_2", "Z^181+Z_2", 120),
    "dual-canonical-d6": ("Z^12", "Z^102+Z_2^4+Z_4", "Z^331+Z_2^20+Z_4", 240),
    "canonical-d6": ("Z^7", "Z^72", "Z^205+Z_2^2", 145),
}


def short(g):
    s = f"Z^{g['free_rank']}"
    for d in sorted(set(g["factors"])):
        k = g["factors"].count(d)
        s += f"+Z_{d}" + (f"^{k}" if k > 1 else "")
    return s


print(f"{'tiling':<18} {'H^1':<6} {'H^2':<18} {'H^3':<20} {'chi':>4}  S_3")
for name in PRESET_NAMES:
    r = run(load_preset(name))
    row = tuple(short(g) for g in r["H"][1:]) + (r["chi"],)
    print(f"{name:<18} {row[0]:<6} {row[1]:<18} {row[2]:<20} {row[3]:>4}  {r['s3_status']}")
    if row != LITERATURE[name]:
        print(f"{'':<18} literature: {LITERATURE[name]}")
    for w in r["warnings"]:
        print(f"{'':<18} warning: {w}")

# canonical D6: the computed H^1 differs from the literature value by exactly 6,
# and that row's own alternating sum 205 - 72 + 7 - 1 = 139 misses its chi = 145.
# With H^1 = Z^13 the alternating sum is 145, matching the count formula.
