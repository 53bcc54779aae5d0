#!/usr/bin/env python3

import json
import unittest

import numpy as np
from vonroos_zero import output
from vonroos_zero.output import OutputFormat
from vonroos_zero.spectra import SpectrumConvention


ROWS = [
    {"name": "mm", "value": 0.1, "admissible": True, "count": 3},
    {"name": "gw", "value": float("inf"), "admissible": False, "count": np.int64(0)},
]
COLUMNS = ["name", "value", "admissible", "count"]


class TestFormatValue(unittest.TestCase):
    def test_scalars(self):
        self.assertEqual(output.format_value(0.1), "0.10000000000000001")
        self.assertEqual(output.format_value(1.0), "1")
        self.assertEqual(output.format_value(-0.25), "-0.25")
        self.assertEqual(output.format_value(np.float64(1.375)), "1.375")
        self.assertEqual(output.format_value(True), "true")
        self.assertEqual(output.format_value(np.bool_(False)), "false")
        self.assertEqual(output.format_value(7), "7")
        self.assertEqual(output.format_value(None), "")
        self.assertEqual(output.format_value(SpectrumConvention.AsPublished), "published")

    def test_json_values(self):
        self.assertEqual(output.json_value(float("inf")), "null")
        self.assertEqual(output.json_value(float("nan")), "null")
        self.assertEqual(output.json_value(None), "null")
        self.assertEqual(output.json_value(False), "false")
        self.assertEqual(output.json_value("mm"), '"mm"')
        self.assertEqual(output.json_value(0.5), "0.5")


class TestRenderTable(unittest.TestCase):
    def test_csv(self):
        text = output.render_table(ROWS, OutputFormat.CSV, COLUMNS)
        self.assertEqual(
            text,
            "name,value,admissible,count\n"
            "mm,0.10000000000000001,true,3\n"
            "gw,inf,false,0\n",
        )

    def test_csv_empty_is_header_only(self):
        text = output.render_table([], OutputFormat.CSV, COLUMNS)
        self.assertEqual(text, "name,value,admissible,count\n")

    def test_json_parses_and_maps_non_finite_to_null(self):
        text = output.render_table(ROWS, OutputFormat.JSON)
        self.assertTrue(text.endswith("]\n"))
        parsed = json.loads(text)
        self.assertEqual(parsed[0]["value"], 0.1)
        self.assertIsNone(parsed[1]["value"])
        self.assertIs(parsed[1]["admissible"], False)
        self.assertEqual(list(parsed[0]), COLUMNS)
        self.assertEqual(output.render_table([], OutputFormat.JSON), "[]\n")

    def test_pretty(self):
        text = output.render_table(ROWS, OutputFormat.PRETTY, COLUMNS)
        lines = text.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0].split(), COLUMNS)
        self.assertIn("0.10000000000000001", lines[1])
        self.assertEqual(
            output.render_table([], OutputFormat.PRETTY, COLUMNS),
            "name value admissible count\n",
        )

    def test_deterministic(self):
        for output_format in OutputFormat:
            self.assertEqual(
                output.render_table(ROWS, output_format, COLUMNS),
                output.render_table(ROWS, output_format, COLUMNS),
            )

    def test_render_record(self):
        record = output.render_record({"zeta": 0.875, "admissible": True}, OutputFormat.JSON)
        self.assertEqual(record, '{"zeta": 0.875, "admissible": true}\n')
        csv = output.render_record({"zeta": 0.875}, OutputFormat.CSV)
        self.assertEqual(csv, "zeta\n0.875\n")


class TestFieldRows(unittest.TestCase):
    def test_rho_major_order(self):
        rows = output.field_rows(
            np.array([1.0, 2.0]), np.array([0.5, 1.5, 2.5]), np.arange(6.0).reshape(2, 3)
        )
        self.assertEqual(len(rows), 6)
        self.assertEqual(rows[1], {"rho": 1.0, "z": 1.5, "value": 1.0})
        self.assertEqual(rows[3], {"rho": 2.0, "z": 0.5, "value": 3.0})
