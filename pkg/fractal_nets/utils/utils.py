#!/usr/bin/env python3

import math
import numbers
import numpy as np
from fractal_nets.utils.exceptions import InvalidParameterError

SEED_MODULUS = 2**64

def parse_dims(text):
    """Parse a grid shape written as 'n1xn2x...'.

    Args:
        text (str): Grid shape, e.g. '32x32'.

    Returns:
        list: Side lengths as positive integers.

    """

    parts = str(text).strip().lower().split('x')
    try:
        dims = [int(part) for part in parts]
    except ValueError:
        raise InvalidParameterError("Invalid dims '%s', expected e.g. 32x32." % text)
    return check_dims(dims)

def format_dims(dims):
    return 'x'.join(str(n) for n in dims)

def coerce_dims(value):
    """Accept dims as 'n1xn2' text or as a sequence of integers."""

    if isinstance(value, str):
        return parse_dims(value)
    if isinstance(value, numbers.Integral):
        return check_dims([value])
    try:
        dims = list(value)
    except TypeError:
        raise InvalidParameterError("Invalid dims %r." % (value,))
    if not all(isinstance(n, numbers.Integral) for n in dims):
        raise InvalidParameterError("Grid side lengths must be integers, got %r." % (dims,))
    return check_dims([int(n) for n in dims])

def check_dims(dims):
    if len(dims) == 0:
        raise InvalidParameterError("dims must contain at least one side length.")
    for n in dims:
        if n <= 0:
            raise InvalidParameterError("Grid side lengths must be positive, got %s." % format_dims(dims))
    return list(dims)

def check_probability(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Real) or math.isnan(value):
        raise InvalidParameterError("%s must be a real number, got %r." % (name, value))
    if not 0.0 <= value <= 1.0:
        raise InvalidParameterError("%s must be in [0, 1], got %s." % (name, value))
    return float(value)

def check_int(value, name, minimum):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InvalidParameterError("%s must be an integer, got %r." % (name, value))
    if value < minimum:
        raise InvalidParameterError("%s must be >= %d, got %d." % (name, minimum, value))
    return int(value)

def check_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, numbers.Integral) or not 0 <= seed < SEED_MODULUS:
        raise InvalidParameterError("seed must be an unsigned 64-bit integer, got %r." % (seed,))
    return int(seed)

def make_rng(seed):
    """Random generator used for every draw in fractal-nets.

    All sampling goes through numpy's PCG64 bit generator seeded with the
    64-bit seed, so the same seed always reproduces the same graph.

    Args:
        seed (int): Unsigned 64-bit seed.

    Returns:
        numpy.random.Generator: PCG64 backed generator.

    """

    return np.random.Generator(np.random.PCG64(check_seed(seed)))

def replication_seed(master_seed, cell_index, replication_index, n_reps):
    """Seed of one replication inside a sweep.

    Replication i of cell c uses master_seed + c * (n_reps + 1) + i, wrapped
    to 64 bits. Cell 0 therefore matches a plain run of replications.

    """

    stride = n_reps + 1
    return (master_seed + cell_index * stride + replication_index) % SEED_MODULUS
