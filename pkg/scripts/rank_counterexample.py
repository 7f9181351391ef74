#!/usr/bin/env python3
"""Walk through the 3x2 full-column-rank counterexample.

The matrix has full column rank although none of its three 2x2 interval
submatrices is regular, so full column rank of an interval matrix cannot
be certified by exhibiting a regular square submatrix.  The script prints
the exact verdicts plus the singular member found inside each submatrix.
"""

from intlinalg import (
    Interval,
    IntervalMatrix,
    has_full_column_rank_exact,
    is_regular_exact,
)


def main() -> None:
    matrix = IntervalMatrix(
        [
            [Interval.point(1), Interval(0, 1)],
            [Interval.point(-1), Interval(0, 1)],
            [Interval(-1, 1), Interval.point(1)],
        ]
    )
    print("matrix rows:")
    for row in matrix.entries:
        print("   ", "  ".join(str(e) for e in row))
    verdict = has_full_column_rank_exact(matrix)
    print(f"\nfull column rank: {verdict.answer}")
    for rows in ((0, 1), (0, 2), (1, 2)):
        sub = matrix.submatrix(rows, (0, 1))
        decision = is_regular_exact(sub)
        print(f"\nsubmatrix rows {rows}: regular = {decision.answer}")
        if not decision.answer:
            member = decision.certificate.member
            print("  singular member:", member)
            print("  kernel witness: ", decision.certificate.witness)


if __name__ == "__main__":
    main()
