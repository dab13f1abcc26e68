from numbers import Integral

from ialcbench.errors import BoundError, CapExceededError


def iter_bits(mask):
    """
    Iterate over the indices of the set bits of an integer, lowest first.

    Parameters
    ----------
    mask : int
        Non-negative integer used as a bit set.

    Returns
    -------
    out : generator of int
    """
    idx = 0
    while mask:
        if mask & 1:
            yield idx
        mask >>= 1
        idx += 1


def mask_of(indices):
    """
    Return the bit set containing the given indices.
    """
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def full_mask(n):
    return (1 << n) - 1


def check_cap(what, requested, cap):
    """
    Validate a user supplied search bound against its configured cap.

    Raises
    ------
    BoundError
        If `requested` is not a positive integer.

    CapExceededError
        If `requested` is larger than `cap`.
    """
    if not isinstance(requested, Integral) or requested < 1:
        raise BoundError(what, requested)
    if requested > cap:
        raise CapExceededError(what, requested, cap)


def fresh_name(prefix, used):
    """
    Return the lowest name of the form prefix0, prefix1, ... not in `used`.
    """
    idx = 0
    while f"{prefix}{idx}" in used:
        idx += 1
    return f"{prefix}{idx}"
