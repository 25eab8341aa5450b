# SPDX-License-Identifier: Apache-2.0
""" libraries of common functionality for the code computations and the harness """

import json

from joblib import Parallel, delayed
from tqdm import tqdm


def load_json(filepath):
    """Load from JSON file."""
    with open(filepath, "r", encoding="utf-8") as f:
        return json.load(f)


def dump_json(filepath, data, indent=2):
    """Dump to JSON file."""
    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=indent)


def parallel_map(func, items, n_jobs=1, display_progress=False):
    """Apply `func` to every element of `items`, yielding results in input order.

    Args:
        func: picklable callable taking a single item
        items: iterable of items; it is materialized to know the total
        n_jobs(int): number of joblib workers, 1 runs in-process, -1 uses all cores
        display_progress(bool): show a tqdm progress bar on stderr

    Yields:
        func(item) for each item, in the order of `items`
    """
    items = list(items)
    parallel = Parallel(backend="loky", n_jobs=n_jobs, return_as="generator")
    results = parallel(delayed(func)(item) for item in items)
    if display_progress:
        results = tqdm(results, total=len(items))
    yield from results
