import io
import shutil
import tempfile
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from mahonian.export import rows_as_records, triangle_rows, write_csv
from mahonian.fixtures import BUNDLED_FIXTURES_DIR, compare_with_fixture, fixtures_dir, load_fixture
from mahonian.triangles import TriangleKind


def tampered_copy(directory: Path, kind: str, n: int, k: int, value: int) -> None:
    """Copy the bundled fixtures into `directory` with one cell replaced."""
    for src in BUNDLED_FIXTURES_DIR.glob("*.csv"):
        shutil.copy(src, directory / src.name)
    path = directory / f"table_{kind}.csv"
    lines = path.read_text(encoding="utf-8").splitlines()
    prefix = f"{n},{k},"
    lines = [f"{prefix}{value}" if line.startswith(prefix) else line for line in lines]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


class FixtureTests(SimpleTestCase):
    def test_bundled_tables_load(self):
        a = load_fixture(TriangleKind.A)
        b = load_fixture("b")
        self.assertEqual(sorted(a.rows), [1, 2, 3, 4, 5, 6])
        self.assertEqual(sorted(b.rows), [1, 2, 3, 4, 5])
        self.assertEqual(b.rows[3][4], 8)
        self.assertEqual(a.totals[6], 5400)
        self.assertEqual(b.totals[5], 48000)

    def test_bundled_tables_match(self):
        for kind in TriangleKind:
            report = compare_with_fixture(load_fixture(kind))
            self.assertTrue(report.passed, report.first_failure)
            self.assertEqual(report.check_name, "oeis-check")

    def test_tampered_cell_is_reported(self):
        with tempfile.TemporaryDirectory() as tmp:
            tampered_copy(Path(tmp), "b", 3, 4, 9)
            report = compare_with_fixture(load_fixture("b", tmp))
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure, "(3,4): expected 8, got 9")

    def test_missing_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(FileNotFoundError):
                load_fixture("a", tmp)

    def test_directory_from_settings(self):
        self.assertEqual(fixtures_dir(), BUNDLED_FIXTURES_DIR)
        with override_settings(MAHONIAN_FIXTURES_DIR="/srv/tables"):
            self.assertEqual(fixtures_dir(), Path("/srv/tables"))


class ExportTests(SimpleTestCase):
    def test_wide_csv_with_totals(self):
        buf = io.StringIO()
        write_csv(triangle_rows("b", 5), buf, with_totals=True)
        lines = buf.getvalue().splitlines()
        self.assertEqual(len(lines), 5)
        self.assertTrue(lines[-1].startswith("5,48000,1,5,14,30,"))
        self.assertEqual(lines[0], "1,1,1,1")

    def test_single_type_a_row(self):
        buf = io.StringIO()
        write_csv(triangle_rows("a", 1), buf)
        self.assertEqual(buf.getvalue(), "1,1\n")

    def test_long_csv(self):
        buf = io.StringIO()
        write_csv(triangle_rows("a", 2), buf, long=True)
        self.assertEqual(buf.getvalue().splitlines(), ["n,k,value", "1,0,1", "2,0,1", "2,1,1"])

    def test_records(self):
        records = rows_as_records(triangle_rows("a", 6), with_totals=True)
        self.assertEqual([r["total"] for r in records], [0, 1, 9, 72, 600, 5400])
        self.assertEqual(records[2], {"n": 3, "kind": "a", "coeffs": [1, 2, 2, 1], "total": 9})
