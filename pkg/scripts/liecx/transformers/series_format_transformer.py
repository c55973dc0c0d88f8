import io
import json
from typing import Any, List, Sequence

import pandas as pd

from liecx.errors import InvalidInputError
from liecx.words.dim_series import DimSeries
from liecx.words.word_basis import DLWord, homology_degree

SERIES_COLUMNS = ["m", "dim"]


def to_json(payload: Any) -> str:
    """JSON text for a result object exposing to_dict(), or for plain data"""
    data = payload.to_dict() if hasattr(payload, "to_dict") else payload
    return json.dumps(data, indent=4, ensure_ascii=False)


def series_to_json(series: DimSeries) -> str:
    """Series as indented JSON"""
    return to_json(series)


def series_from_json(text: str) -> DimSeries:
    """Inverse of series_to_json"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"series JSON is malformed: {e}")
    if not isinstance(data, dict):
        raise InvalidInputError("series JSON must be an object")
    return DimSeries.from_dict(data)


def series_to_frame(series: DimSeries) -> pd.DataFrame:
    """One row per degree, columns m and dim"""
    return pd.DataFrame({"m": range(len(series)), "dim": list(series.dims)}, columns=SERIES_COLUMNS)


def frame_to_csv(frame: pd.DataFrame) -> str:
    """CSV text without the index column"""
    return frame.to_csv(index=False, lineterminator="\n")


def series_to_csv(series: DimSeries) -> str:
    """CSV with header m,dim; p and the label are not part of the table"""
    return frame_to_csv(series_to_frame(series))


def series_from_csv(text: str, p: int, label: str = "") -> DimSeries:
    """Read an m,dim table back into a series"""
    try:
        frame = pd.read_csv(io.StringIO(text), dtype="int64")
    except (ValueError, pd.errors.ParserError) as e:
        raise InvalidInputError(f"series CSV is malformed: {e}")
    if list(frame.columns) != SERIES_COLUMNS:
        raise InvalidInputError(f"series CSV must have columns {SERIES_COLUMNS}, got {list(frame.columns)}")
    if frame["m"].tolist() != list(range(len(frame))):
        raise InvalidInputError("series CSV degrees must run 0, 1, 2, ... without gaps")
    return DimSeries(p, label, tuple(int(d) for d in frame["dim"]))


def _join(values: Sequence[int]) -> str:
    """Comma-joined integers"""
    return " ".join(str(v) for v in values)


def words_to_frame(words: List[DLWord], p: int) -> pd.DataFrame:
    """One row per word: the rendered word, exponents, Bockstein flags and homology degree"""
    rows = [
        {
            "word": str(word),
            "s": _join(word.s),
            "eps": _join(word.eps),
            "degree": homology_degree(word, p, word.length),
        }
        for word in words
    ]
    return pd.DataFrame(rows, columns=["word", "s", "eps", "degree"])


def words_to_json(words: List[DLWord], p: int) -> str:
    """Words with their degrees as JSON"""
    return to_json([
        {**word.to_dict(), "word": str(word), "degree": homology_degree(word, p, word.length)}
        for word in words
    ])


def records_to_csv(records: List[dict]) -> str:
    """CSV for a list of flat records, columns in first-record order"""
    columns = list(records[0].keys()) if records else []
    return frame_to_csv(pd.DataFrame(records, columns=columns))
