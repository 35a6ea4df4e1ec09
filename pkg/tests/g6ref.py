"""Reference graph6 encoder, written directly from the format definition and
kept independent of the package parser so round-trips are a real oracle."""


def encode_graph6(n: int, edges) -> str:
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    if n <= 62:
        header = chr(63 + n)
    elif n <= 258047:
        header = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        header = "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in edge_set else 0)
    while len(bits) % 6:
        bits.append(0)
    payload = "".join(
        chr(63 + int("".join(map(str, bits[pos:pos + 6])), 2))
        for pos in range(0, len(bits), 6)
    )
    return header + payload
