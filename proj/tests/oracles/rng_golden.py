"""Reference SplitMix64 / xoshiro256** streams and sampled tournaments, written from the published
algorithm descriptions with Python integers masked to 64 bits."""
import itertools
from math import comb, factorial
from itertools import permutations

M = (1 << 64) - 1


def splitmix(state):
    while True:
        state = (state + 0x9E3779B97F4A7C15) & M
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M
        yield z ^ (z >> 31)


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & M


class Xoshiro:
    def __init__(self, seed):
        g = splitmix(seed)
        self.s = [next(g) for _ in range(4)]

    @classmethod
    def substream(cls, seed, index):
        return cls(seed ^ next(splitmix(index)))

    def next(self):
        s = self.s
        result = (rotl((s[1] * 5) & M, 7) * 9) & M
        t = (s[1] << 17) & M
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result

    def uniform(self, bound):
        threshold = ((1 << 64) - bound) % bound
        while True:
            r = self.next()
            if r >= threshold:
                return r % bound


def colex_subsets(n, k):
    return sorted(itertools.combinations(range(n), k), key=lambda c: tuple(reversed(c)))


def sample_orientation(n, k, seed, trial):
    rng = Xoshiro.substream(seed, trial)
    return [rng.uniform(factorial(k)) for _ in range(comb(n, k))]


def flat_edges(n, k, orientation):
    perms = list(permutations(range(k)))
    out = []
    for subset, o in zip(colex_subsets(n, k), orientation):
        out.extend(subset[i] for i in perms[o])
    return out


def burnside_tournaments(n, k):
    """Relabeling classes of k-tournaments on n vertices."""
    subsets = list(itertools.combinations(range(n), k))
    total = 0
    for g in permutations(range(n)):
        fixed = 1
        seen = set()
        for s in subsets:
            if s in seen:
                continue
            orbit, cur = [], s
            while cur not in orbit:
                orbit.append(cur)
                cur = tuple(sorted(g[v] for v in cur))
            seen.update(orbit)
            power = list(range(n))
            for _ in range(len(orbit)):
                power = [g[v] for v in power]
            fixed *= factorial(k) if all(power[v] == v for v in s) else 0
        total += fixed
    return total // factorial(n)


if __name__ == "__main__":
    r = Xoshiro(42)
    print("xoshiro(42):", [hex(r.next()) for _ in range(5)])
    r = Xoshiro.substream(7, 3)
    print("substream(7,3):", [hex(r.next()) for _ in range(3)])
    r = Xoshiro(1)
    print("uniform6(1):", [r.uniform(6) for _ in range(12)])
    g = splitmix(0)
    print("splitmix(0):", [hex(next(g)) for _ in range(3)])
    for trial in range(3):
        o = sample_orientation(5, 3, 7, trial)
        print(f"sample(5,3,7,{trial}):", o)
    o = sample_orientation(4, 3, 99, 5)
    print("sample(4,3,99,5):", o, "flat:", flat_edges(4, 3, o))
    for n, k in [(3, 2), (4, 2), (5, 2), (6, 2), (4, 3), (5, 3), (5, 4), (6, 3)]:
        print(f"burnside({n},{k}) =", burnside_tournaments(n, k))
