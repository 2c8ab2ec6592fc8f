"""Benchmark candidate strategies for the square example dimension run."""
import sys
import time

import basisschemes as bs
from basisschemes import groebner as gbm
from basisschemes.groebner import Ideal, buchberger, find_linear_solvable
from basisschemes.orderings import DegRevLex, TermOrdering


class ArrowWeighted(TermOrdering):
    """Non-negative weight vector first, DegRevLex tie-break."""

    kind = "arrow"

    def __init__(self, universe, weights):
        super().__init__(universe)
        self._w = tuple(weights[n] for n in universe.names)
        self._drl = DegRevLex(universe)

    def tuple_key(self, e):
        return (sum(w * a for w, a in zip(self._w, e)), self._drl.tuple_key(e))

    def descriptor(self):
        return {"kind": "arrow", "weights": dict(zip(self.u.names, self._w))}


def greedy_preprocess(ideal, max_rhs_deg=None):
    gens = [g for g in ideal.generators if not g.is_zero]
    eliminated = []
    while True:
        best = None
        for k, g in enumerate(gens):
            hit = find_linear_solvable(g)
            if hit:
                name, rhs = hit
                if max_rhs_deg is not None and rhs.total_degree() > max_rhs_deg:
                    continue
                score = (rhs.total_degree(), len(rhs), k)
                if best is None or score < best[0]:
                    best = (score, k, name, rhs)
        if best is None:
            break
        _, k, name, rhs = best
        rule = {name: rhs}
        gens = [h.substitute(rule) for i, h in enumerate(gens) if i != k]
        gens = [h for h in gens if not h.is_zero]
        eliminated.append(name)
    keep = [n for n in ideal.u.names if n not in set(eliminated)]
    target = ideal.u.restrict(keep)
    return Ideal(target, [g.convert(target) for g in gens]), eliminated


def arrow_weights(odata, universe):
    w = {}
    for name in universe.names:
        i, j = universe.positions[name]
        w[name] = (odata.border[j - 1].total_degree()
                   - odata.terms[i - 1].total_degree())
    return w


def run(tag, ideal, ordering, budget):
    t0 = time.time()
    state = {"n": 0}

    def trace(nbasis, npairs):
        state["n"] += 1
        if state["n"] % 200 == 0:
            print("  [%s] add %d pairs=%d t=%.0fs" % (
                tag, state["n"], npairs, time.time() - t0), flush=True)
        if time.time() - t0 > budget:
            raise TimeoutError

    gbm.TRACE = trace
    try:
        gb = buchberger(ideal.generators, ordering,
                        gbm.ResourceLimits(max_basis=40000, max_degree=60))
        dt = time.time() - t0
        work = Ideal(ideal.u, list(gb))
        dim = gbm.krull_dimension(work, ordering)
        print("[%s] DONE gb=%d dim=%d t=%.0fs" % (tag, len(gb), dim, dt),
              flush=True)
        return dim
    except TimeoutError:
        print("[%s] TIMEOUT adds=%d t=%.0fs" % (
            tag, state["n"], time.time() - t0), flush=True)
        return None
    finally:
        gbm.TRACE = None


def main():
    which = sys.argv[1] if len(sys.argv) > 1 else "all"
    budget = int(sys.argv[2]) if len(sys.argv) > 2 else 500
    u = bs.VariableUniverse.for_x(["x", "y"])
    O = bs.order_ideal_from_strings("1, x, y, x^2, y^2", u)
    IB = bs.border_scheme_ideal(O)

    def with_order(ideal, names):
        return DegRevLex(ideal.u, names)

    if which in ("all", "full-drl"):
        run("full-drl", IB, DegRevLex(IB.u), budget)
    if which in ("all", "full-drl-row"):
        names = sorted(IB.u.names, key=lambda n: IB.u.positions[n])
        run("full-drl-row", IB, with_order(IB, names), budget)
    if which in ("all", "full-arrow"):
        run("full-arrow", IB, ArrowWeighted(IB.u, arrow_weights(O, IB.u)), budget)
    if which in ("all", "cap2-drl"):
        small, _ = greedy_preprocess(IB, 2)
        print("cap2: %d gens in %d vars" % (len(small.generators),
                                            len(small.u.names)))
        run("cap2-drl", small, DegRevLex(small.u), budget)
    if which in ("all", "cap2-arrow"):
        small, _ = greedy_preprocess(IB, 2)
        w = arrow_weights(O, IB.u)
        run("cap2-arrow", small, ArrowWeighted(small.u, w), budget)
    if which in ("all", "cap2-drl-row"):
        small, _ = greedy_preprocess(IB, 2)
        names = sorted(small.u.names, key=lambda n: small.u.positions[n])
        run("cap2-drl-row", small, with_order(small, names), budget)


if __name__ == "__main__":
    main()
