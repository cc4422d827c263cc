"""
Test Report Writers
Created by Sergie Code
"""

import csv
import json
import os

import numpy as np
import pytest

from src.export.reports import INVARIANT_COLUMNS, to_jsonable, write_invariants_csv, write_json
from src.singularities.classify import SingularityType


def test_to_jsonable_plain_types():
    report = {
        'nan': float('nan'),
        'inf': np.float64(np.inf),
        'z': 1 + 2j,
        'flag': np.bool_(True),
        'count': np.int64(3),
        'points': np.array([0.5, 1.5]),
        'type': SingularityType.SWALLOWTAIL,
        1: 'key',
    }
    assert to_jsonable(report) == {
        'nan': None, 'inf': None, 'z': [1.0, 2.0], 'flag': True, 'count': 3,
        'points': [0.5, 1.5], 'type': 'Swallowtail', '1': 'key',
    }


def test_write_json(temp_dir):
    path = write_json([{'seed': 1.1 + 0j, 'period': None, 'value': float('nan')}],
                      os.path.join(temp_dir, 'out', 'report.json'))
    assert json.loads(path.read_text()) == [{'seed': [1.1, 0.0], 'period': None, 'value': None}]


def test_write_json_full_precision(temp_dir):
    path = write_json({'third': 1.0 / 3.0, 'tenth': 0.1, 'point': 0.5 + 0.25j},
                      os.path.join(temp_dir, 'precise.json'))
    text = path.read_text()
    assert '0.33333333333333331' in text
    assert '0.10000000000000001' in text
    assert json.loads(text) == {'third': 1.0 / 3.0, 'tenth': 0.1, 'point': [0.5, 0.25]}


def test_write_json_float_format(temp_dir):
    path = write_json({'value': 1.0 / 3.0}, os.path.join(temp_dir, 'short.json'), float_format='.3g')
    assert json.loads(path.read_text()) == {'value': 0.333}


class TestInvariantTable:

    def rows(self):
        return [
            {'t': 0.0, 'z': 1 + 0j, 'kappa_s_closed': float('nan'), 'kappa_s_general': float('nan'),
             'kappa_nu': float('nan'), 'kappa_locus': 0.25, 'type': 'Swallowtail',
             'epsilon_gamma': float('nan')},
            {'t': 0.1, 'z': 0.5 + 0.25j, 'kappa_s_closed': -0.5, 'kappa_s_general': -0.5,
             'kappa_nu': 0.0, 'kappa_locus': 0.5, 'type': 'CuspidalEdge', 'epsilon_gamma': -1},
        ]

    def test_columns_and_cells(self, temp_dir):
        path = write_invariants_csv(self.rows(), os.path.join(temp_dir, 'table.csv'))
        with open(path, newline='') as handle:
            records = list(csv.reader(handle))
        assert tuple(records[0]) == INVARIANT_COLUMNS
        assert len(records) == 3
        first = dict(zip(INVARIANT_COLUMNS, records[1]))
        assert first['kappa_s_closed'] == 'nan'
        assert first['type'] == 'Swallowtail'
        second = dict(zip(INVARIANT_COLUMNS, records[2]))
        assert float(second['re_z']) == 0.5
        assert float(second['im_z']) == 0.25
        assert float(second['epsilon_gamma']) == -1.0

    def test_full_precision(self, temp_dir):
        rows = self.rows()
        rows[1]['kappa_s_closed'] = 1.0 / 3.0
        path = write_invariants_csv(rows, os.path.join(temp_dir, 'table.csv'))
        with open(path, newline='') as handle:
            records = list(csv.DictReader(handle))
        assert float(records[1]['kappa_s_closed']) == pytest.approx(1.0 / 3.0, rel=1e-16)
