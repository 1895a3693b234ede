import pytest

from diary_embed import datastore  # pylint: disable=import-error

rows = [
    {'g': 'e', 'g2': 'a1', 'd_group': 1, 'd_image': 1, 'class': 'leo'},
    {'g': 'e', 'g2': 'a1 b1', 'd_group': 2, 'd_image': 1, 'class': 'leo'},
    {'g': 'a1', 'g2': 'b1 a2', 'd_group': 4, 'd_image': 1, 'class': 'neither'},
]


def test_summarize_reports_the_ratio_spread():
    summary = datastore.summarize('distort', rows, violations=2, M='64')

    assert summary.records == 3
    assert summary.ratio_min == 0.25
    assert summary.ratio_median == 0.5
    assert summary.ratio_max == 1.0
    assert summary.classification_counts == {'leo': 2, 'neither': 1}
    assert summary.violations == 2
    assert summary.M == '64'


def test_summarize_skips_pairs_at_distance_zero():
    summary = datastore.summarize('distort', [{'d_group': 0, 'd_image': 0}])

    assert summary.records == 1
    assert summary.ratio_min is None
    assert summary.classification_counts == {}


def test_base_record_store_is_not_implemented():
    store = datastore.BaseRecordStore()

    with pytest.raises(NotImplementedError):
        store.put_records([])
    with pytest.raises(NotImplementedError):
        store.get_summary()


def test_buffered_record_store_holds_the_run():
    store = datastore.BufferedRecordStore()
    summary = datastore.summarize('distort', rows)

    store.put_records(rows)
    store.put_summary(summary)

    assert store.get_records() == rows
    assert store.get_summary() == summary


def test_jsonl_record_store_writes_records_a_csv_twin_and_the_summary(tmp_path):
    prefix = tmp_path / 'out' / 'distort'
    store = datastore.JsonlRecordStore(config={'prefix': str(prefix)})
    summary = datastore.summarize('distort', rows, details={'mode': 'paper'})

    store.put_records(rows)
    store.put_summary(summary)

    assert store.records_path == tmp_path / 'out' / 'distort.jsonl'
    assert store.get_records() == rows
    assert (tmp_path / 'out' / 'distort.csv').exists()
    assert store.get_summary() == summary


def test_csv_record_store_reads_the_records_back(tmp_path):
    store = datastore.CsvRecordStore(config={'prefix': str(tmp_path / 'classify')})

    store.put_records(rows)

    assert store.get_records() == rows


def test_file_record_stores_raise_when_nothing_was_written(tmp_path):
    store = datastore.CsvRecordStore(config={'prefix': str(tmp_path / 'missing')})

    with pytest.raises(FileNotFoundError):
        store.get_records()
    assert store.get_summary() is None
