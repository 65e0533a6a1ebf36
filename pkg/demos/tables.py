"""
The two Gaussian tables
=======================

``make_table`` evaluates the Heisenberg and Young sweeps by quadrature.
``mode="reference"`` uses the closed forms that reproduce the reference
values instead, and ``discrepancy_report`` lines the two up.

Run with an output directory to also get the CSV and SVG files::

    python demos/tables.py /tmp/tables
"""
import sys
from pathlib import Path

from olctkit.calibration import discrepancy_report
from olctkit.cli import emit_plot_data
from olctkit.inequalities import make_table, write_table_csv

for which in ("heisenberg", "young"):
    quad = make_table(which)
    print(which)
    for row in discrepancy_report(which, quad):
        print(f"  alpha={row['alpha']:<4} second={row['second']:<4} "
              f"ref=({row['ref_lhs']:.5g}, {row['ref_rhs']:.5g}) "
              f"closed=({row['closed_lhs']:.5g}, {row['closed_rhs']:.5g}) "
              f"quad=({row['quad_lhs']:.5g}, {row['quad_rhs']:.5g})")
    if len(sys.argv) > 1:
        out = Path(sys.argv[1]) / which
        out.mkdir(parents=True, exist_ok=True)
        write_table_csv(which, quad, out / f"table_{which}.csv")
        emit_plot_data(which, quad, out, svg=True)
