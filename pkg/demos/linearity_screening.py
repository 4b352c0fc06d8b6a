"""Screen a family of clutters for linear resolution of the edge ideal.

The combinatorial test never computes a resolution: it restricts to unions
of two transversals and looks for a ranked projection, of the restriction or
of its complement, with two disjoint edges.  Every verdict is then replayed
against the Hochster-formula oracle, and each failure certificate is
re-executed to exhibit the two disjoint edges it promises.
"""

from linstrand import (
    QQ,
    Clutter,
    complete_clutter,
    d_partite_complement,
    edge_ideal,
    ferrers_clutter,
    is_linear,
    is_linear_by_betti,
    random_clutter,
    ranked_projection,
    restrict,
)

candidates = [
    ("complete C(2,2,2)", complete_clutter([2, 2, 2])),
    ("Ferrers [3,2,1]", ferrers_clutter([3, 2, 1])),
    ("Ferrers [4,1]", ferrers_clutter([4, 1])),
]
for seed in range(6):
    candidates.append((f"random seed {seed}", random_clutter([2, 2, 2], 0.6, seed=seed)))

t = complete_clutter([2, 2]).vertices
candidates.append(
    ("two disjoint edges", Clutter(t, (t.resolve(("a1", "b1")), t.resolve(("a2", "b2")))))
)

for name, c in candidates:
    verdict = is_linear(c)
    line = f"{name}: {'linear' if verdict.linear else 'not linear'}"
    if c.edges:
        oracle = is_linear_by_betti(edge_ideal(c), QQ)
        agree = oracle == bool(verdict)
        line += f"  (oracle {'agrees' if agree else 'DISAGREES'})"
        assert agree
    print(line)
    if verdict.certificate is None:
        continue
    cert = verdict.certificate
    w = cert.first | cert.second
    induced = restrict(c, w)
    side = induced if cert.side == "clutter" else d_partite_complement(induced)
    proj = ranked_projection(side, cert.parts)
    disjoint = [
        (a, b)
        for i, a in enumerate(proj.edges)
        for b in proj.edges[i + 1 :]
        if not (a & b)
    ]
    assert disjoint, "certificate failed to replay"
    a, b = disjoint[0]
    lbl = proj.vertices.label
    print(
        f"  certificate: restrict to {c.vertices.label(cert.first)} u "
        f"{c.vertices.label(cert.second)}, {cert.side} side, parts {list(cert.parts)}; "
        f"disjoint edges {lbl(a)} and {lbl(b)}"
    )
