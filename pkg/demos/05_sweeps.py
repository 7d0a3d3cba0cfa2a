"""Exhaustive sweeps through the library API (the CLI wraps exactly this).

Run:  python demos/05_sweeps.py
"""

from gaussprod import ScanConfig, render_human, run_scan

print("Sweep every theorem over its applicable pairs below 5000:")
print()
report = run_scan(ScanConfig(p_max=5000, theorems=(
    "mordell", "t1", "corollary", "eq2_parity", "symmetry", "t3", "t4"),
    q_values=(3, 5, 7, 11, 13), workers=2))
print(render_human(report))

print("Representation-based checks stay cheap at moderate p:")
report = run_scan(ScanConfig(p_max=3000, theorems=("eq_a", "t2"),
                             q_values=(7, 11, 19, 23)))
print(render_human(report))

print("The same sweeps are available from the command line, e.g.")
print("  gaussprod scan --p-max 5000 --q-max 13 --theorems t1,t3,t4")
print("  gaussprod scan --p-max 100000 --theorems all --format json")
