import itertools


def chunked_iterable(iterable, *, size):
    """
    Generate the entries in ``iterable`` in chunks of size ``size``.

    e.g. chunked_iterable([1, 2, 3, 4, 5], 2) -> [1, 2], [3, 4], [5]

    Taken from https://alexwlchan.net/2018/12/iterating-in-fixed-size-chunks/
    """
    it = iter(iterable)
    while True:
        chunk = tuple(itertools.islice(it, size))
        if not chunk:
            break
        yield chunk


def merge_intervals(intervals):
    """
    Merge closed integer intervals (lo, hi) into a sorted list of disjoint
    intervals.  Intervals that overlap or touch (hi + 1 == next lo) are
    joined; empty intervals (hi < lo) are dropped.

    e.g. merge_intervals([(5, 7), (1, 2), (3, 3)]) -> [(1, 3), (5, 7)]
    """
    merged = []
    for lo, hi in sorted(i for i in intervals if i[0] <= i[1]):
        if merged and lo <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged
