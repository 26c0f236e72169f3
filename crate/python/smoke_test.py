"""Smoke test for the Python bindings: python python/smoke_test.py"""

import unichord

n, edges = unichord.named_graph("house")
verdict = unichord.recognize(n, edges)
assert verdict["long_unichord_free"] is False
assert len(verdict["witness"]["cycle"]) == 5
try:
    unichord.color(n, edges)
except ValueError as e:
    assert "long" in str(e)
else:
    raise AssertionError("house must be refused")

n, edges = unichord.named_graph("petersen")
c = unichord.color(n, edges, checked=True)
assert c["colors"] <= 4 and c["omega"] == 2 and c["bound"] == 4
assignment = {int(v): k for v, k in c["assignment"].items()}
assert unichord.verify_coloring(n, edges, assignment)
assert unichord.chromatic_number(n, edges) == 3
assert unichord.clique_number(n, edges) == 2
assert unichord.find_long_unichord(n, edges) is None

n, edges = unichord.random_composed(11, 150)
assert (n, edges) == unichord.random_composed(11, 150)
assert unichord.recognize(n, edges)["long_unichord_free"]
c = unichord.color(n, edges)
assert c["colors"] <= c["bound"]

assert [unichord.f_k(3, x) for x in range(4)] == [0, 1, 4, 10]
print("smoke test passed")
