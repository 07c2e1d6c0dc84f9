"""Gray-code utilities shared by the synthesis passes.

The reflected Gray code drives two things here: the control sequence of the
CNOTs in a lowered multiplexed rotation, and the +/-1 sign matrix relating
original to lowered rotation angles.
"""
from __future__ import annotations

__all__ = ["gray_code", "binary_gray_dot", "flip_position", "sign_matrix"]


def gray_code(i: int) -> int:
    """i-th codeword of the reflected Gray code."""
    if i < 0:
        raise ValueError(f"index must be non-negative, got {i}")
    return i ^ (i >> 1)


def binary_gray_dot(i: int, j: int) -> int:
    """Parity of the bitwise product of binary codeword i and Gray codeword j."""
    if i < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    return (i & gray_code(j)).bit_count() & 1


def flip_position(j: int) -> int:
    """Bit position that changes between gray_code(j-1) and gray_code(j), j >= 1."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return (j & -j).bit_length() - 1


def sign_matrix(d: int) -> list[list[int]]:
    """d x d matrix with entries (-1)**binary_gray_dot(i, j), 0-indexed."""
    if d < 1 or d & (d - 1):
        raise ValueError(f"d must be a power of two, got {d}")
    return [[-1 if binary_gray_dot(i, j) else 1 for j in range(d)] for i in range(d)]
