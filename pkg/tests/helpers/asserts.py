import dataclasses
import enum

import numpy as np

from types import SimpleNamespace


def are_equal(struct1, struct2, check_types=True):
    """
    Compare two potentially nested structures containing Python objects, including numpy arrays, dataclasses and namespaces.

    Parameters
    ----------
    - struct1, struct2: The structures to compare. These could be dataclasses, dicts, lists, tuples, SimpleNamespace, or primitive types.
    - check_types: If True, it will check whether the types of struct1 and struct2 match.

    Returns
    -------
    - bool: True if both structures are equal (arrays bitwise, NaN equal to NaN), False otherwise.
    """
    # Case 1: If both are numpy arrays, compare bitwise with NaN == NaN
    if isinstance(struct1, np.ndarray) and isinstance(struct2, np.ndarray):
        if struct1.shape != struct2.shape:
            return False
        return np.array_equal(struct1, struct2, equal_nan=struct1.dtype.kind == "f")

    # Case 2: If both are dataclass instances, compare their fields
    elif dataclasses.is_dataclass(struct1) and dataclasses.is_dataclass(struct2):
        if check_types and type(struct1) is not type(struct2):
            return False
        return all(
            are_equal(getattr(struct1, f.name), getattr(struct2, f.name), check_types)
            for f in dataclasses.fields(struct1)
        )

    # Case 3: If both are SimpleNamespace, compare their __dict__ attributes
    elif isinstance(struct1, SimpleNamespace) and isinstance(struct2, SimpleNamespace):
        return are_equal(vars(struct1), vars(struct2), check_types)

    # Case 4: If both are dictionaries, compare their keys and values
    elif isinstance(struct1, dict) and isinstance(struct2, dict):
        if struct1.keys() != struct2.keys():
            return False
        return all(
            are_equal(struct1[key], struct2[key], check_types) for key in struct1
        )

    # Case 5: If both are lists or tuples, compare their elements
    elif isinstance(struct1, (list, tuple)) and isinstance(struct2, (list, tuple)):
        if len(struct1) != len(struct2):
            return False
        return all(
            are_equal(item1, item2, check_types)
            for item1, item2 in zip(struct1, struct2)
        )

    # Case 6: Enum members compare by identity
    elif isinstance(struct1, enum.Enum) or isinstance(struct2, enum.Enum):
        return struct1 is struct2

    # Case 7: If both are of the same basic type (int, float, str, etc.), compare directly
    elif check_types and type(struct1) is not type(struct2):
        return False
    elif isinstance(struct1, float) and np.isnan(struct1):
        return isinstance(struct2, float) and np.isnan(struct2)
    else:
        return struct1 == struct2
