"""From a configuration of points with coordinate labels to a clutter.

Each point is a row of d coordinate labels; distinct labels occurring in the
same coordinate become the vertices of one part, and each point becomes the
edge of its labels.  Points sharing every label collapse to one edge.
"""

import json
from pathlib import Path

from linstrand import QQ, from_point_configuration, is_linear, lyubeznik_last_column

path = Path(__file__).parent / "instances" / "three_point_configuration.json"
points = json.loads(path.read_text())["points"]

print("points:")
for row in points:
    print("  " + " ".join(str(tuple(x)) for x in row))

c = from_point_configuration(points)
t = c.vertices
print(f"\nclutter: {c.n} vertices in {t.d} parts, {len(c.edges)} edges")
for j in range(t.d):
    members = ", ".join(t.names[v] for v in t.part_members(j))
    print(f"  part {j}: {members}")
for e in c.edges:
    print(f"  edge {t.label(e)}")

verdict = is_linear(c)
print(f"\nlinear resolution: {'yes' if verdict.linear else 'no'}")
col = lyubeznik_last_column(c, QQ)
print(f"last Lyubeznik column: {col.values}")
