"""Shared fixtures: parsed corpora and the scripted 3-commit history repo."""

from __future__ import annotations

import os
import subprocess
from pathlib import Path

import pytest

from featdebt.config import AnalysisConfig
from featdebt.frontend import build_model, parse_unit

ROOT = Path(__file__).resolve().parent.parent
MINI = ROOT / "fixtures" / "mini"
SMELLS_POSITIVE = ROOT / "fixtures" / "smells" / "positive"
SMELLS_BOUNDARY = ROOT / "fixtures" / "smells" / "boundary"


def load_corpus(root: Path) -> dict[str, str]:
    return {
        p.relative_to(root).as_posix(): p.read_text(encoding="utf-8")
        for p in sorted(root.rglob("*.java"))
    }


def model_from(root: Path):
    sources = load_corpus(root)
    units = [parse_unit(text, path) for path, text in sources.items()]
    return build_model(units)


@pytest.fixture(scope="session")
def mini_sources():
    return load_corpus(MINI)


@pytest.fixture(scope="session")
def mini_model():
    return model_from(MINI)


@pytest.fixture(scope="session")
def positive_model():
    return model_from(SMELLS_POSITIVE)


@pytest.fixture(scope="session")
def boundary_model():
    return model_from(SMELLS_BOUNDARY)


@pytest.fixture()
def default_config():
    return AnalysisConfig()


# -- scripted history repository ---------------------------------------------

ALPHA = """package hist;

public class Alpha {

    int codigo;
    int volume;
    int margem;
    int tipo;
}
"""

BETA = """package hist;

public class Beta {

    int chave;
    int custo;
    int prazo;
}
"""

MOTOR = """package hist;

public class Motor {

    private Alpha pa;
    private Beta pb;
    private int cont;
    private int lim;

    public int conferir() {
        if (pa.codigo > 0 && pa.volume >= 0 && cont >= 0 && cont < 99) { cont++; }
        if (cont > 1 && cont > 2 && cont > 3 && cont > 4) { cont--; }
        return cont;
    }
    public int revisar() {
        if (pb.chave > 0 && pb.custo >= 0 && cont >= 0 && cont < 50) { cont++; }
        if (cont > 5 && cont > 6 && cont > 7 && cont > 8) { return pb.chave; }
        return pb.custo;
    }
    public int cortar(Alpha t) {
        if (t.margem > 0 && lim > 0 && lim < 99 && lim != 7) { return lim + 1; }
        if (lim > 1 && lim > 2 && lim > 3 && lim > 4) { return lim - 1; }
        return lim;
    }
    public boolean avaliar(Beta b) {
        if (b.prazo > 0 && lim > 0 && lim < 120 && lim != 9) { return true; }
        if (lim > 1 && lim > 2 && lim > 3 && lim > 4) { return false; }
        return lim > 5;
    }
    public int resumo(Alpha x) {
        int soma = sinal() + ponto() + ajuste() + extra();
        if (soma > 1 && soma > 2 && soma > 3 && soma > 4) { return x.tipo; }
        if (soma > 5 && soma > 6 && soma > 7 && soma > 8) { return soma; }
        return 0;
    }
    private int sinal() { return 1; }
    private int ponto() { return 2; }
    private int ajuste() { return 3; }
    private int extra() { return 4; }
}
"""


def _longo() -> str:
    body = ["package hist;", "", "public class Longo {", "",
            "    public int executar() {", "        int a = 0;"]
    for k in range(68):
        body.append(f"        a = a + {k % 7};")
    body.append("        return a;")
    body.append("    }")
    body.append("}")
    return "\n".join(body) + "\n"


LONGO = _longo()

GOD_KEY = "GodClass|hist.Motor"
LONG_KEY = "LongMethod|hist.Longo#executar()"

COMMIT_DATES = (
    "2024-01-01T12:00:00+00:00",
    "2024-01-02T12:00:00+00:00",
    "2024-01-03T12:00:00+00:00",
)


def _git(repo: Path, *args: str, date: str | None = None) -> str:
    env = dict(os.environ)
    env.update(
        {
            "GIT_AUTHOR_NAME": "Fixture Author",
            "GIT_AUTHOR_EMAIL": "fixture@example.org",
            "GIT_COMMITTER_NAME": "Fixture Author",
            "GIT_COMMITTER_EMAIL": "fixture@example.org",
        }
    )
    if date is not None:
        env["GIT_AUTHOR_DATE"] = date
        env["GIT_COMMITTER_DATE"] = date
    proc = subprocess.run(
        ["git", "-C", str(repo), *args], capture_output=True, text=True, env=env
    )
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.strip()


def build_history_repo(base: Path) -> tuple[Path, list[str]]:
    """Three commits: clean corpus, god class added, god class refactored
    away while a long method appears."""
    repo = base / "histrepo"
    repo.mkdir()
    _git(repo, "init", "-q")
    pkg = repo / "hist"
    pkg.mkdir()
    (pkg / "Alpha.java").write_text(ALPHA)
    (pkg / "Beta.java").write_text(BETA)
    _git(repo, "add", "-A")
    _git(repo, "commit", "-q", "-m", "initial corpus", date=COMMIT_DATES[0])
    sha1 = _git(repo, "rev-parse", "HEAD")

    (pkg / "Motor.java").write_text(MOTOR)
    _git(repo, "add", "-A")
    _git(repo, "commit", "-q", "-m", "add motor service", date=COMMIT_DATES[1])
    sha2 = _git(repo, "rev-parse", "HEAD")

    (pkg / "Motor.java").unlink()
    (pkg / "Longo.java").write_text(LONGO)
    _git(repo, "add", "-A")
    _git(repo, "commit", "-q", "-m", "split motor, add batch job", date=COMMIT_DATES[2])
    sha3 = _git(repo, "rev-parse", "HEAD")

    return repo, [sha1, sha2, sha3]


@pytest.fixture()
def history_repo(tmp_path):
    return build_history_repo(tmp_path)
