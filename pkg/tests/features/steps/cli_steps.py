"""
Step definitions for the command-line feature.
"""

import io
import json
import shlex
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from behave import given, when, then

from src.modules.cli import run


def _run(context, argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        context.exit_code = run(argv)
    context.stdout = out.getvalue()
    context.stderr = err.getvalue()


@given('a config file with')
def step_config_file(context):
    """Write the docstring to a YAML file in the scenario directory."""
    context.config_path = Path(context.work_dir) / "run.yaml"
    context.config_path.write_text(context.text, encoding="utf-8")


@when('I run grassflop with "{command}"')
def step_run(context, command):
    _run(context, shlex.split(command))


@when('I run grassflop with "{command}" saving reports')
def step_run_saving(context, command):
    _run(context, shlex.split(command) + ["--output-dir", context.work_dir])


@when('I run grassflop with "{command}" using the config file')
def step_run_with_config(context, command):
    _run(context, shlex.split(command) + ["--config", str(context.config_path)])


@then('the exit code is {code:d}')
def step_exit_code(context, code):
    assert context.exit_code == code, f"exit code {context.exit_code}, stderr: {context.stderr}"


@then('the JSON output is {expected}')
def step_json_output(context, expected):
    assert json.loads(context.stdout) == json.loads(expected)


@then('the output contains "{text}"')
def step_output_contains(context, text):
    assert text in context.stdout, context.stdout


@then('standard error contains "{text}"')
def step_stderr_contains(context, text):
    assert text in context.stderr, context.stderr


@then('every check in the report passed')
def step_all_passed(context):
    checks = json.loads(context.stdout)["checks"]
    assert checks and all(check["pass"] for check in checks)


@then('one report file named "{suite}" was saved')
def step_report_saved(context, suite):
    assert len(list(Path(context.work_dir).glob(f"*_{suite}_report.json"))) == 1
