"""
Where Richard's bound is sharp
==============================

Richard's inequality bounds |<a,x><x,b> - |x|^2 <a,b>/2| by |x|^2 |a||b|/2.
With x a unit vector this is a statement about the Selberg operator of
{x}, which is just the projection onto span{x}. Below we look at one
equality case, check it with the certificate, then break it.
"""

import numpy as np

from ipx import catalog, linalg
from ipx.search import certify_equality

# the forced example: two orthonormal vectors and their bisector
a = np.array([1.0, 0.0])
b = np.array([0.0, 1.0])
x = np.array([1.0, 1.0]) / np.sqrt(2)

r = catalog.evaluate("RICHARD", {"a": a, "b": b, "x": x})
print("RICHARD chain values:", r.values, "tightness:", r.tightness)

# same inputs, read through the Selberg operator of Z = {x}
r = catalog.evaluate("TH_GEN", {"a": a, "b": b, "Z": [x]})
print("TH_GEN  chain values:", r.values, "tightness:", r.tightness)

# equality holds exactly when S_Z a = a/2 + (|a|/|b|) e^{i theta} b / 2
cert = certify_equality(a, b, [x])
print("certificate:", cert)

# a unitary change of basis keeps every inner product, so equality survives
rng = np.random.default_rng(0)
U = linalg.random_unitary(5, rng)
emb = lambda v: U @ np.concatenate([v, np.zeros(3)])
cert = certify_equality(emb(a), emb(b), [emb(x)])
print("rotated into C^5:", cert.holds, "residual %.1e" % cert.residual)

# tilt x a little and the certificate fails, the ratio drops below 1
t = 0.3
x2 = np.array([np.cos(np.pi / 4 + t), np.sin(np.pi / 4 + t)])
print("tilted:", certify_equality(a, b, [x2]))
print("tilted tightness:", catalog.evaluate("TH_GEN", {"a": a, "b": b, "Z": [x2]}).tightness)
