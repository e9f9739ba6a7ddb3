"""Route alternatives on a tagged street grid, exported as GeoJSON.

A 12x12 grid gets random road tags (bicycle lane, near a highway, near
buildings).  The four objectives are edge length plus three tag-discounted
lengths, and a handful of coefficient vectors play different cyclists.
Open the output in any GeoJSON viewer (geojson.io, QGIS, ...).
"""
import json
import warnings

import numpy as np

from mowsp import LambdaSet, Mog, export_geojson, solution_document, solve_idaq, synth_geo_objectives

rng = np.random.default_rng(7)
side = 12
xy = np.array([(i, j) for i in range(side) for j in range(side)], dtype=float)
# jitter so lengths differ, and scale into a small lon/lat box
coords = 13.40 + 0.002 * (xy + rng.uniform(-0.2, 0.2, xy.shape))

src, dst = [], []
for i in range(side):
    for j in range(side):
        u = i * side + j
        for di, dj in ((0, 1), (1, 0)):
            if i + di < side and j + dj < side:
                v = (i + di) * side + j + dj
                src += [u, v]
                dst += [v, u]
tags = rng.random((len(src), 3)) < [0.3, 0.2, 0.6]
g = synth_geo_objectives(Mog(len(xy), src, dst, np.zeros((len(src), 1)), coords=coords, tags=tags))

riders = LambdaSet([
    [1.0, 0.1, 0.1, 0.1],   # shortest
    [0.2, 1.0, 0.1, 0.1],   # bike lanes
    [0.2, 0.1, 1.0, 0.1],   # avoid highways
    [0.2, 0.1, 0.1, 1.0],   # quiet streets
    [0.4, 0.4, 0.4, 0.4],   # a bit of everything
])
sols, stats = solve_idaq(g, 0, riders)
target = side * side - 1
for i, sol in enumerate(sols):
    print(f"rider {i + 1}: cost {sol.cost[target]:.5f}, {len(sol.path(target)) - 1} blocks")
distinct = {tuple(s.path(target)) for s in sols}
print(f"{len(distinct)} distinct routes for {riders.K} riders; "
      f"{stats.developed_paths} developed paths vs {riders.K * g.node_count} for the standard solver")

doc = solution_document(g, 0, riders, sols, "idaq")
with warnings.catch_warnings():
    warnings.simplefilter("error")
    gj = export_geojson(g, doc, [target])
with open("routes.geojson", "w") as fh:
    json.dump(gj, fh)
print("wrote routes.geojson")
