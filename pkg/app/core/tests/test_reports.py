from django.test import SimpleTestCase

from core.reports import VerificationReport, mismatch, run_check


class VerificationReportTests(SimpleTestCase):
    def test_passed_iff_no_failure(self):
        with self.assertRaises(ValueError):
            VerificationReport(check_name="x", passed=True, first_failure="boom")
        with self.assertRaises(ValueError):
            VerificationReport(check_name="x", passed=False)

    def test_mismatch_text(self):
        self.assertEqual(mismatch("(3,4)", 8, 9), "(3,4): expected 8, got 9")

    def test_run_check_success(self):
        report = run_check("demo", {"n": 3}, lambda: None)
        self.assertTrue(report.passed)
        self.assertIsNone(report.first_failure)
        self.assertEqual(report.params, {"n": 3})
        self.assertGreaterEqual(report.elapsed, 0)

    def test_run_check_failure_is_logged(self):
        with self.assertLogs("core.reports", level="WARNING") as logs:
            report = run_check("demo", {}, lambda: "k=2: expected 1, got 0")
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure, "k=2: expected 1, got 0")
        self.assertIn("demo", logs.output[0])
