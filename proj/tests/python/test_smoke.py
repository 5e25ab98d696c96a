#!/usr/bin/env python3
"""Smoke tests for the python bindings."""

import sys

import icl


def check(name, cond):
    print(("ok  " if cond else "FAIL") + " " + name)
    if not cond:
        sys.exit(f"smoke test failed: {name}")


s = icl.symmetric_inverse_2()
check("size", s.size() == 7)
check("idempotents", len(s.idempotents()) == 4)

beta = icl.PartialPerm([2, None])
check("compose to empty", (beta * beta).rank() == 0)
check("inverse", beta.inverse() * beta == icl.PartialPerm([None, 2]))

closure = icl.InverseSemigroup.closure([beta])
check("closure size", closure.size() == 5)

try:
    icl.InverseSemigroup.closure([icl.PartialPerm([2, None])], 2)
    check("cap enforced", False)
except RuntimeError:
    check("cap enforced", True)

check("subsemigroup count", icl.num_full_inverse_subsemigroups(s) == 3)
check("trace count", icl.num_semilattice_congruences(s) == 7)

lat = icl.lattice(s)
check("lattice count", lat["count"] == 10)
check("lattice nodes", len(lat["nodes"]) == 10)
check("hasse edges", len(lat["hasse"]) > 0)

check("brute force partitions", icl.brute_force_count(s, "partitions") == 10)
check("brute force joins", icl.brute_force_count(s, "principal-joins") == 10)

report = icl.certify(s, "smoke")
check("certify", report["all_pass"] and report["count"] == 10)

b = icl.bicyclic
check("bicyclic mul", b.mul((1, 2), (3, 4)) == (2, 4))
out = b.check("prefix=[2];tail=inf", "k=2,d=5")
check("bicyclic valid", out["valid"] and out["normalizer"] == "k=2,d=1")
out = b.check("prefix=[3];tail=per([2])", "k=3,d=2")
check("bicyclic periodic", out["valid"] and out["threshold"] == 1)

print("smoke tests passed")
