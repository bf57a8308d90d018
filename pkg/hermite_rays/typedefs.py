from typing import Dict, List, Tuple, Union

JsonValue = Union[str, int, float, bool, type(None), Tuple, List, Dict]
JsonObject = Dict[str, JsonValue]

Number = (int, float)

# One cell of an output record before rendering
Cell = Union[str, int, float, type(None)]
Record = Dict[str, Cell]


class Undefined:
    def __repr__(self):
        return 'undefined'

    def __str__(self):
        return 'undefined'


UNDEFINED = Undefined()
