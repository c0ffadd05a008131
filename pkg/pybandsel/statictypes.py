from functools import wraps
from inspect import signature
from numbers import Integral
from numbers import Real
from typing import Any
from typing import Union

import numpy as np


def statictypes(func):
    sig = signature(func)

    def is_instance(obj, typ) -> bool:
        if typ is Any:
            return True
        origin = getattr(typ, '__origin__', None)
        if origin is Union:
            return any(is_instance(obj, t) for t in typ.__args__)
        if origin is tuple:
            if not isinstance(obj, tuple):
                return False
            args = typ.__args__
            if len(args) == 2 and args[1] is Ellipsis:
                return all(is_instance(x, args[0]) for x in obj)
            return len(obj) == len(args) and all(
                is_instance(x, t) for x, t in zip(obj, args)
            )
        if origin in (list, set):
            return isinstance(obj, origin) and all(
                is_instance(x, typ.__args__[0]) for x in obj
            )
        if origin is dict:
            return isinstance(obj, dict) and all(
                is_instance(k, typ.__args__[0]) and
                is_instance(v, typ.__args__[1])
                for k, v in obj.items()
            )
        if typ is bool:
            return isinstance(obj, (bool, np.bool_))
        if typ is int:
            return isinstance(obj, Integral) and \
                not isinstance(obj, (bool, np.bool_))
        if typ is float:
            return isinstance(obj, Real) and \
                not isinstance(obj, (bool, np.bool_))
        return isinstance(obj, typ)

    def type_to_string(t) -> str:
        origin = getattr(t, '__origin__', None)
        if origin is Union:
            args = [a for a in t.__args__ if a is not type(None)]
            inner = ' or '.join(type_to_string(a) for a in args)
            if len(args) < len(t.__args__):
                return f'Optional[{inner}]'
            return inner
        if origin in (list, set, tuple, dict):
            return (
                origin.__name__.capitalize() + '['
                + ', '.join(
                    '...' if a is Ellipsis else type_to_string(a)
                    for a in t.__args__
                ) + ']'
            )
        return getattr(t, '__name__', str(t))

    def check_parameters(*args, **kwargs):
        bound = sig.bind(*args, **kwargs)
        for name, value in bound.arguments.items():
            if name == 'self':
                continue
            expected_type = sig.parameters[name].annotation
            if expected_type is sig.empty:
                continue
            if not is_instance(value, expected_type):
                raise TypeError(
                    f"Argument '{name}' has incorrect type. "
                    f'Expected {type_to_string(expected_type)}, '
                    f"got '{type(value).__name__}'",
                )

    @wraps(func)
    def wrapper(*args, **kwargs):
        check_parameters(*args, **kwargs)
        return func(*args, **kwargs)

    return wrapper
