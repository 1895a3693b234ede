import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import BaseModel

from diary_embed import defaults, utils

logger = logging.getLogger(defaults.NAME)


class RunSummary(BaseModel):
    """
    The summary block of a sweep: the spread of d_image / d_group, the classification census and the
    number of pairs that broke a bound.
    """
    command: str
    records: int = 0
    ratio_min: Optional[float] = None
    ratio_median: Optional[float] = None
    ratio_max: Optional[float] = None
    classification_counts: Dict[str, int] = {}
    violations: int = 0
    M: Optional[str] = None
    details: dict = {}


def summarize(command: str, rows: Sequence[dict], violations: int = 0, M: Optional[str] = None,
              details: dict = None) -> RunSummary:
    """
    Build the summary of distortion rows (dicts with d_group, d_image and class).
    """
    ratios = np.array([row['d_image'] / row['d_group'] for row in rows if row.get('d_group')], dtype=float)
    counts: Dict[str, int] = {}
    for row in rows:
        if 'class' in row:
            counts[row['class']] = counts.get(row['class'], 0) + 1

    summary = RunSummary(command=command, records=len(rows), classification_counts=dict(sorted(counts.items())),
                         violations=violations, M=M, details=details or {})
    if ratios.size:
        summary.ratio_min = float(np.min(ratios))
        summary.ratio_median = float(np.median(ratios))
        summary.ratio_max = float(np.max(ratios))
    return summary


class BaseRecordStore:
    """
    The base class of a record store, where a run puts its line records and its summary block.
    """
    service_name = ''

    class Config(BaseModel):
        pass

    def __init__(self, config: dict = None, **kwargs):  # pylint: disable=unused-argument
        config = config or {}
        self.config = self.Config(**config)

    def put_records(self, rows: List[dict]):
        """
        Store the line records of a run.

        Raises:
            NotImplementedError: This is a base class and therefore has no default implementation
        """
        raise NotImplementedError

    def get_records(self) -> List[dict]:
        """
        Raises:
            NotImplementedError: This is a base class and therefore has no default implementation
        """
        raise NotImplementedError

    def put_summary(self, summary: RunSummary):
        """
        Raises:
            NotImplementedError: This is a base class and therefore has no default implementation
        """
        raise NotImplementedError

    def get_summary(self) -> Optional[RunSummary]:
        """
        Raises:
            NotImplementedError: This is a base class and therefore has no default implementation
        """
        raise NotImplementedError


class BufferedRecordStore(BaseRecordStore):
    """
    An in-memory record store, nothing is persisted.

    Example config:
    record_store:
      type: buffered
    """
    service_name = 'buffered'

    def __init__(self, config: dict = None, **kwargs):
        super().__init__(config, **kwargs)
        self.rows: List[dict] = []
        self.summary: Optional[RunSummary] = None

    def put_records(self, rows: List[dict]):
        logger.info(f'{self.service_name} Holding {len(rows)} records')
        self.rows = list(rows)

    def get_records(self) -> List[dict]:
        return self.rows

    def put_summary(self, summary: RunSummary):
        self.summary = summary

    def get_summary(self) -> Optional[RunSummary]:
        return self.summary


class FileSystemRecordStore(BaseRecordStore):
    """
    Records written next to a path prefix: <prefix>.<suffix> for the records, <prefix>.summary.json for the summary.
    """
    suffix = ''

    class Config(BaseModel):
        prefix: str = 'results'

    @property
    def records_path(self) -> Path:
        return Path(f'{self.config.prefix}.{self.suffix}')

    @property
    def summary_path(self) -> Path:
        return Path(f'{self.config.prefix}.summary.json')

    def write_csv(self, rows: List[dict], path: Path):
        utils.safe_make_dir(path.parent)
        pd.DataFrame(rows).to_csv(path, index=False)

    def put_summary(self, summary: RunSummary):
        utils.safe_make_dir(self.summary_path.parent)
        with self.summary_path.open('w', encoding='utf-8') as fw:
            json.dump(summary.dict(), fw, ensure_ascii=False, indent=4)

    def get_summary(self) -> Optional[RunSummary]:
        if not self.summary_path.exists():
            return None
        with self.summary_path.open('r', encoding='utf-8') as fr:
            return RunSummary(**json.load(fr))


class JsonlRecordStore(FileSystemRecordStore):
    """
    Line-delimited JSON records plus a CSV twin for plotting.

    Example config:
    record_store:
      type: jsonl
      config:
        prefix: results/distort
    """
    service_name = 'jsonl'
    suffix = 'jsonl'

    def put_records(self, rows: List[dict]):
        logger.info(f'{self.service_name} Writing {len(rows)} records to {self.records_path}')
        utils.write_jsonl(self.records_path, rows)
        self.write_csv(rows, self.records_path.with_suffix('.csv'))

    def get_records(self) -> List[dict]:
        if not self.records_path.exists():
            raise FileNotFoundError(f'Expected {self.records_path} is not present')
        with self.records_path.open('r', encoding='utf-8') as fr:
            return [json.loads(line) for line in fr if line.strip()]


class CsvRecordStore(FileSystemRecordStore):
    """
    CSV records only.

    Example config:
    record_store:
      type: csv
      config:
        prefix: results/distort
    """
    service_name = 'csv'
    suffix = 'csv'

    def put_records(self, rows: List[dict]):
        logger.info(f'{self.service_name} Writing {len(rows)} records to {self.records_path}')
        self.write_csv(rows, self.records_path)

    def get_records(self) -> List[dict]:
        if not self.records_path.exists():
            raise FileNotFoundError(f'Expected {self.records_path} is not present')
        return pd.read_csv(self.records_path).to_dict(orient='records')
