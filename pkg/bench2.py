"""Probe matrix: presentation x ordering for the square dimension run."""
import sys
import time

import basisschemes as bs
from basisschemes import groebner as gbm
from basisschemes.groebner import Ideal, buchberger, find_linear_solvable
from basisschemes.orderings import DegRevLex, TermOrdering
from basisschemes.poly import divide


class ArrowWeighted(TermOrdering):
    kind = "arrow"

    def __init__(self, universe, weights):
        super().__init__(universe)
        self._w = tuple(weights[n] for n in universe.names)
        self._drl = DegRevLex(universe)

    def tuple_key(self, e):
        return (sum(w * a for w, a in zip(self._w, e)), self._drl.tuple_key(e))

    def descriptor(self):
        return {"kind": "arrow", "weights": dict(zip(self.u.names, self._w))}


def arrow_weights(odata, universe):
    return {name: (odata.border[j - 1].total_degree()
                   - odata.terms[i - 1].total_degree())
            for name in universe.names
            for (i, j) in [universe.positions[name]]}


def interreduce(gens, ordering):
    changed = True
    while changed:
        changed = False
        gens = [g for g in gens if not g.is_zero]
        for k in range(len(gens)):
            others = gens[:k] + gens[k + 1:]
            if not others:
                continue
            _, r = divide(gens[k], others, ordering)
            if r != gens[k] and (r.is_zero or len(r) <= len(gens[k])):
                gens = others[:k] + [r] + others[k:] if not r.is_zero else others
                changed = True
                break
    return [g for g in gens if not g.is_zero]


def greedy_preprocess(ideal, max_rhs_deg=None, inter=False):
    gens = [g for g in ideal.generators if not g.is_zero]
    eliminated = []
    ordering = DegRevLex(ideal.u)
    while True:
        if inter:
            gens = interreduce(gens, ordering)
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


def run(tag, ideal, ordering, budget):
    t0 = time.time()
    state = {"n": 0}

    def trace(nbasis, npairs):
        state["n"] += 1
        if time.time() - t0 > budget:
            raise TimeoutError(f"adds={state['n']} pairs={npairs}")

    gbm.TRACE = trace
    try:
        gb = buchberger(ideal.generators, ordering,
                        gbm.ResourceLimits(max_basis=60000, max_degree=60))
        dt = time.time() - t0
        work = Ideal(ideal.u, list(gb))
        dim = gbm.krull_dimension(work, ordering)
        print("[%s] DONE gb=%d dim=%d t=%.0fs" % (tag, len(gb), dim, dt),
              flush=True)
    except TimeoutError as exc:
        print("[%s] TIMEOUT %s t=%.0fs" % (tag, exc, time.time() - t0),
              flush=True)
    finally:
        gbm.TRACE = None


def main():
    budget = int(sys.argv[2]) if len(sys.argv) > 2 else 120
    which = sys.argv[1]
    u = bs.VariableUniverse.for_x(["x", "y"])
    O = bs.order_ideal_from_strings("1, x, y, x^2, y^2", u)
    IB = bs.border_scheme_ideal(O)

    if which == "inter":
        small, elim = greedy_preprocess(IB, None, inter=True)
        print("inter: %d gens in %d vars degs %s lens %s" % (
            len(small.generators), len(small.u.names),
            sorted(g.total_degree() for g in small.generators),
            sorted(len(g) for g in small.generators)), flush=True)
        run("inter-drl", small, DegRevLex(small.u), budget)
    elif which == "inter2":
        small, elim = greedy_preprocess(IB, 2, inter=True)
        print("inter2: %d gens in %d vars degs %s lens %s" % (
            len(small.generators), len(small.u.names),
            sorted(g.total_degree() for g in small.generators),
            sorted(len(g) for g in small.generators)), flush=True)
        run("inter2-drl", small, DegRevLex(small.u), budget)
    elif which == "full-row":
        names = sorted(IB.u.names, key=lambda n: IB.u.positions[n])
        run("full-row", IB, DegRevLex(IB.u, names), budget)
    elif which == "full-arrow":
        run("full-arrow", IB, ArrowWeighted(IB.u, arrow_weights(O, IB.u)), budget)
    elif which == "cap2-arrow":
        small, _ = greedy_preprocess(IB, 2)
        run("cap2-arrow", small, ArrowWeighted(small.u, arrow_weights(O, small.u)),
            budget)
    elif which == "cap2-row":
        small, _ = greedy_preprocess(IB, 2)
        names = sorted(small.u.names, key=lambda n: small.u.positions[n])
        run("cap2-row", small, DegRevLex(small.u, names), budget)


if __name__ == "__main__":
    main()
