"""Numpy implementations of the particle-ensemble kernels.

Used whenever the compiled ``_ckernels`` extension is unavailable or
``HDDLOGIC_PURE_PYTHON`` is set. Signatures match the extension exactly;
``signs`` arrays are int8 and are modified in place.
"""
import numpy as np


def apply_field(cos_phi, signs, h, direction):
    flip = (signs != direction) & (cos_phi <= h)
    signs[flip] = direction
    return int(np.count_nonzero(flip))


# numerator and denominator use the same reduction so saturation is exactly +-1
def net_magnetization(cos_phi, signs):
    return float((signs * cos_phi).sum() / cos_phi.sum())


def apply_field_cells(cos_phi, signs, h, directions):
    d = np.asarray(directions, dtype=np.int8)[:, None]
    flip = (signs != d) & (cos_phi <= h)
    np.copyto(signs, np.broadcast_to(d, signs.shape), where=flip)
    return int(np.count_nonzero(flip))


def net_magnetization_cells(cos_phi, signs):
    return (signs * cos_phi).sum(axis=1) / cos_phi.sum(axis=1)
