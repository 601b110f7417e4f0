"""Local data store, SQLite at ~/.cyclocode/data.db."""

from __future__ import annotations

import json
import os
import sqlite3
import uuid
from datetime import datetime
from pathlib import Path
from typing import Any, Optional

_DEFAULT_DB_PATH = os.path.join(str(Path.home()), ".cyclocode", "data.db")

_SCHEMA = """\
CREATE TABLE IF NOT EXISTS verification_runs (
    id TEXT PRIMARY KEY,
    created_at TEXT NOT NULL,
    spec_key TEXT NOT NULL,
    passed INTEGER NOT NULL,
    record_json TEXT NOT NULL
);

CREATE TABLE IF NOT EXISTS config (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
"""


def default_db_path() -> str:
    return os.environ.get("CYCLOCODE_DB") or _DEFAULT_DB_PATH


class DataStore:
    """Local SQLite data store."""

    def __init__(self, db_path: Optional[str] = None):
        self.db_path = db_path or default_db_path()
        os.makedirs(os.path.dirname(os.path.abspath(self.db_path)), exist_ok=True)
        self._conn: Optional[sqlite3.Connection] = None
        self._init_db()

    def _get_conn(self) -> sqlite3.Connection:
        if self._conn is None:
            self._conn = sqlite3.connect(self.db_path)
            self._conn.row_factory = sqlite3.Row
        return self._conn

    def _init_db(self) -> None:
        conn = self._get_conn()
        conn.executescript(_SCHEMA)
        conn.commit()

    def close(self) -> None:
        if self._conn:
            self._conn.close()
            self._conn = None

    # ── Config ───────────────────────────────────────────────────────

    def get_config(self, key: str) -> Optional[str]:
        conn = self._get_conn()
        row = conn.execute("SELECT value FROM config WHERE key = ?", (key,)).fetchone()
        return row["value"] if row else None

    def set_config(self, key: str, value: str) -> None:
        conn = self._get_conn()
        conn.execute(
            "INSERT OR REPLACE INTO config (key, value) VALUES (?, ?)",
            (key, value),
        )
        conn.commit()

    # ── Verification runs ────────────────────────────────────────────

    def save_run(self, spec_key: str, passed: bool, record: dict[str, Any]) -> str:
        run_id = str(uuid.uuid4())
        conn = self._get_conn()
        conn.execute(
            """INSERT INTO verification_runs (id, created_at, spec_key, passed, record_json)
               VALUES (?, ?, ?, ?, ?)""",
            (
                run_id,
                datetime.now().isoformat(),
                spec_key,
                1 if passed else 0,
                json.dumps(record, sort_keys=True),
            ),
        )
        conn.commit()
        return run_id

    def recent_runs(self, limit: int = 20) -> list[dict[str, Any]]:
        conn = self._get_conn()
        rows = conn.execute(
            """SELECT id, created_at, spec_key, passed FROM verification_runs
               ORDER BY created_at DESC LIMIT ?""",
            (limit,),
        ).fetchall()
        return [dict(r) for r in rows]

    def get_run(self, run_id: str) -> Optional[dict[str, Any]]:
        conn = self._get_conn()
        row = conn.execute(
            "SELECT record_json FROM verification_runs WHERE id = ?", (run_id,)
        ).fetchone()
        return json.loads(row["record_json"]) if row else None
