"""Necessary imports to test the command line entry point."""

import json
import os
import tempfile
import unittest
from pathlib import Path

from defecthom.main import build_parser, main

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


class TestMain(unittest.TestCase):
    """Command line entry point tests."""

    workspace: tempfile.TemporaryDirectory

    def setUp(self):
        self.workspace = tempfile.TemporaryDirectory()
        self.addCleanup(self.workspace.cleanup)

    def write_config(self, data: dict) -> str:
        """Stores a configuration in the workspace."""
        path = os.path.join(self.workspace.name, "config.json")
        with open(path, "w", encoding="utf-8") as file:
            json.dump(data, file)
        return path

    def cell_config(self) -> dict:
        """Identity cell run into the workspace."""
        return {
            "kind": "cell",
            "family": "identity",
            "params": {"d": 1},
            "grid": {"n_cell": 16},
            "output_dir": os.path.join(self.workspace.name, "out"),
            "cache": {"enabled": False},
        }

    def test_parses_the_run_verb(self):
        """Parses the run verb."""
        # Act
        args = build_parser().parse_args(
            ["run", "c.json", "--kind", "cell", "--out", "o", "--no-cache", "--quiet"]
        )

        # Assert
        self.assertEqual(args.verb, "run")
        self.assertEqual(args.config, "c.json")
        self.assertEqual(args.kind, "cell")
        self.assertEqual(args.out, "o")
        self.assertTrue(args.no_cache)
        self.assertTrue(args.quiet)

    def test_parses_the_validate_verb(self):
        """Parses the validate verb."""
        # Act
        args = build_parser().parse_args(["validate", "c.json"])

        # Assert
        self.assertEqual(args.verb, "validate")
        self.assertFalse(args.quiet)

    def test_validate_accepts_a_valid_configuration(self):
        """Validate accepts a valid configuration."""
        # Arrange
        path = self.write_config(self.cell_config())

        # Act
        code = main(["validate", path, "--quiet"])

        # Assert
        self.assertEqual(code, 0)

    def test_validate_accepts_the_shipped_configurations(self):
        """Validate accepts the shipped defect, probe and scaling configurations."""
        # Arrange
        names = [
            "defect_gaussian_bump.json",
            "defect_gradient.json",
            "probe_algebraic_decay.json",
            "probe_gaussian_bump.json",
            "scaling_sin_drift.json",
        ]

        for name in names:
            # Act
            code = main(["validate", str(CONFIGS / name), "--quiet"])

            # Assert
            self.assertEqual(code, 0, name)

    def test_validate_rejects_an_unknown_kind(self):
        """Validate rejects an unknown kind."""
        # Arrange
        data = self.cell_config()
        data["kind"] = "sweep"
        path = self.write_config(data)

        # Act
        code = main(["validate", path, "--quiet"])

        # Assert
        self.assertEqual(code, 2)

    def test_run_writes_the_manifest(self):
        """Run writes the manifest."""
        # Arrange
        path = self.write_config(self.cell_config())
        output_dir = os.path.join(self.workspace.name, "elsewhere")

        # Act
        code = main(["run", path, "--out", output_dir, "--quiet"])

        # Assert
        self.assertEqual(code, 0)
        with open(os.path.join(output_dir, "manifest.json"), encoding="utf-8") as file:
            manifest = json.load(file)
        self.assertEqual(manifest["status"], "ok")
        self.assertIn("cell_summary.json", [entry["path"] for entry in manifest["files"]])
