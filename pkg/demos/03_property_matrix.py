# coding: utf-8

# # Eighteen properties in three fields
#
# The matrix runs a probe for each completeness property in each field.  A
# failing cell carries a witness; a holding cell reports what it built.

from ordfield.report import compare, render, run_matrix

report = run_matrix(seed=0)
print(render(report, "md"))

# The statuses match the shipped table.

print("mismatches:", compare(report))

# Cells can be inspected one at a time.

cell = report.cell("laurent", 11)
print(cell.summary())
