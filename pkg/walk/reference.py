"""Dense-array transcription of the two-step-memory update loop.

Rows are basis indices, columns are positions; each sweep reads column k and
writes columns k-1 and k+1 in place, exactly like the hand-written eight update
lines. Used only to cross-check the table-driven engine.
"""
from typing import List

from amplitude.state_vector import StateVector

A, B, C, D = 1, 1, 1, -1


def reference_run(init: StateVector, n: int) -> StateVector:
    if init.memory != 2:
        raise ValueError("reference transcription exists for memory order 2 only")
    if any(k != 0 for k, _ in init.entries):
        raise ValueError("reference transcription starts from amplitudes at the origin")
    width = 2 * n + 3
    origin = n + 1
    re: List[List[int]] = [[0] * width for _ in range(8)]
    im: List[List[int]] = [[0] * width for _ in range(8)]
    for (_, j), (a, b) in init.entries.items():
        re[j][origin] = a
        im[j][origin] = b

    for t in range(n):
        for k in range(origin - t, origin + t + 1, 2):
            for arr in (re, im):
                arr[4][k + 1] += A * arr[0][k] + B * arr[1][k]
                arr[1][k - 1] += C * arr[0][k] + D * arr[1][k]
                arr[0][k - 1] += A * arr[2][k] + B * arr[3][k]
                arr[5][k + 1] += C * arr[2][k] + D * arr[3][k]
                arr[6][k + 1] += A * arr[4][k] + B * arr[5][k]
                arr[3][k - 1] += C * arr[4][k] + D * arr[5][k]
                arr[2][k - 1] += A * arr[6][k] + B * arr[7][k]
                arr[7][k + 1] += C * arr[6][k] + D * arr[7][k]
                for j in range(8):
                    arr[j][k] = 0

    entries = {}
    for j in range(8):
        for col in range(width):
            if re[j][col] or im[j][col]:
                entries[(col - origin, j)] = (re[j][col], im[j][col])
    return StateVector(2, init.scale + n, entries)
