import sys, time
import basisschemes as bs
from basisschemes import groebner as gbm

u = bs.VariableUniverse.for_x(['x','y'])
O = bs.order_ideal_from_strings('1, x, y, x^2, y^2', u)
IB = bs.border_scheme_ideal(O)
t0 = time.time()
state = {'n': 0}
def trace(nb, npairs):
    state['n'] += 1
    if state['n'] % 250 == 0:
        print('add %d pairs=%d t=%.0fs' % (state['n'], npairs, time.time()-t0), flush=True)
gbm.TRACE = trace
gb = IB.groebner_basis(bs.DegRevLex(IB.u), bs.ResourceLimits(max_basis=100000, max_degree=60))
print('DONE gb=%d t=%.0fs' % (len(gb), time.time()-t0), flush=True)
print('dim =', gbm.krull_dimension(IB), flush=True)
