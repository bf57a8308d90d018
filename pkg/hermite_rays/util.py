from typing import Optional, Tuple, Union

from hermite_rays.errors import CfgError, InvalidArgumentError
from hermite_rays.typedefs import JsonObject, JsonValue, UNDEFINED


def get_config_value(config: JsonObject,
                     key: str,
                     value_type: Union[type, Tuple[type, ...]] = None,
                     default_value: JsonValue = UNDEFINED,
                     key_path: str = None) -> JsonValue:
    if not isinstance(config, dict):
        raise CfgError(f'configuration "{key_path or ""}" must be a mapping')
    if key in config:
        value = config[key]
    else:
        if default_value is UNDEFINED:
            raise CfgError(f'missing configuration key "{_join_key_path(key_path, key)}"')
        value = default_value
    if value_type is not None and (isinstance(value, bool) or not isinstance(value, value_type)):
        raise CfgError(f'value for configuration key "{_join_key_path(key_path, key)}" is of wrong type: '
                       f'expected type {_type_name(value_type)}, got type {_type_name(type(value))}')
    return value


def parse_real_range(text: str) -> Tuple[float, float, int]:
    """
    Parse ``"lo:hi:count"`` into a closed sampling range.
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise InvalidArgumentError(f'range "{text}" must have the form lo:hi:count')
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as e:
        raise InvalidArgumentError(f'range "{text}": {e}')
    if count < 1:
        raise InvalidArgumentError(f'range "{text}": count must be at least 1')
    if hi < lo:
        raise InvalidArgumentError(f'range "{text}": hi must not be less than lo')
    return lo, hi, count


def parse_index_range(text: str, lower: int, upper: int) -> Tuple[int, int]:
    """
    Parse an inclusive ``"lo:hi"`` index range and check it against [lower, upper].
    """
    parts = text.split(':')
    if len(parts) != 2:
        raise InvalidArgumentError(f'range "{text}" must have the form lo:hi')
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise InvalidArgumentError(f'range "{text}": {e}')
    if lo > hi:
        raise InvalidArgumentError(f'range "{text}": lo must not exceed hi')
    if lo < lower or hi > upper:
        raise InvalidArgumentError(f'range "{text}" must lie within {lower}:{upper}')
    return lo, hi


def _join_key_path(key_path: Optional[str], key: str) -> str:
    return (key_path + '/' + key) if key_path else key


def _type_name(value_type: Union[type, Tuple[type, ...]]):
    if isinstance(value_type, type):
        return value_type.__name__
    else:
        return ' or '.join(_type_name(t) for t in value_type)
