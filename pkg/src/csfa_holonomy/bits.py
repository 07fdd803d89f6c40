"""State subsets as Python ints (bit ``p`` set iff state ``p`` is a member)."""

MAX_STATES = 64


def mask_of(states):
    m = 0
    for p in states:
        m |= 1 << p
    return m


def members(mask):
    """Ascending list of the states in ``mask``."""
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def full(n):
    return (1 << n) - 1


def image(mask, images):
    """Image of the subset ``mask`` under the map ``images`` (a sequence)."""
    out = 0
    p = 0
    while mask:
        if mask & 1:
            out |= 1 << images[p]
        mask >>= 1
        p += 1
    return out


def fmt(mask):
    return "{" + ",".join(str(p) for p in members(mask)) + "}"
