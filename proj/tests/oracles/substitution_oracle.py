"""Independent substitution iteration and periodicity scan.

Prints limit prefixes and periodicity findings used as frozen test values.
"""

RULES = {
    "golden": ({1: [1, 2], 2: [1]}, 1),
    "tribonacci": ({1: [1, 2, 3], 2: [1], 3: [2]}, 1),
    "supergolden_13": ({1: [1, 3], 2: [1], 3: [2]}, 1),
    "supergolden_31": ({1: [3, 1], 2: [1], 3: [2]}, 1),
    "plastic_23": ({1: [2, 3], 2: [1], 3: [2]}, 1),
    "plastic_32": ({1: [3, 2], 2: [1], 3: [2]}, 1),
}


def return_time(rule, start):
    x, k = start, 0
    while True:
        x, k = rule[x][0], k + 1
        if x == start:
            return k


def prefix(rule, start, count):
    k = return_time(rule, start)
    s = [start]
    while len(s) < count:
        for _ in range(k):
            s = [t for x in s for t in rule[x]]
    return s[:count]


def periods(s, max_period):
    n = len(s)
    pure = eventual = None
    for m in range(1, max_period + 1):
        last = -1
        for i in range(n - m - 1, -1, -1):
            if s[i] != s[i + m]:
                last = i
                break
        if last < 0 and pure is None:
            pure = m
        if last + 1 <= n // 2 and eventual is None:
            eventual = (m, last + 1)
    return pure, eventual


if __name__ == "__main__":
    for name, (rule, start) in RULES.items():
        print(name, "k =", return_time(rule, start), prefix(rule, start, 12))
        print("   periodicity(2000, 500):", periods(prefix(rule, start, 2000), 500))
