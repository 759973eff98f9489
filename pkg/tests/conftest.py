import itertools

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=100,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def triples_of_degree(n):
    """All ordered triples of partitions of n."""
    from kroncalc.partitions import partitions_of

    parts = list(partitions_of(n))
    return itertools.product(parts, parts, parts)


def triples_of_total(total):
    """All ordered triples (alpha, beta, gamma) with |alpha|+|beta|+|gamma| = total."""
    from kroncalc.partitions import partitions_of

    for a in range(total + 1):
        for b in range(total - a + 1):
            c = total - a - b
            for al in partitions_of(a):
                for be in partitions_of(b):
                    for ga in partitions_of(c):
                        yield al, be, ga
