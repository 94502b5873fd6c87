"""
Count store for qln.
Uses SQLite for tilting and quasi-hereditary counts keyed by algebra label.
"""

import os
import sqlite3
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import config

DB_NAME = 'counts.db'

CSV_HEADER = ['n', 'relations', 'tilt_count', 'qhs_count']

SCHEMA = '''
    CREATE TABLE IF NOT EXISTS counts (
        label TEXT PRIMARY KEY,
        n INTEGER NOT NULL,
        relations TEXT NOT NULL,
        tilt_count INTEGER NOT NULL,
        qhs_count INTEGER NOT NULL,
        updated_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP
    );
    CREATE INDEX IF NOT EXISTS idx_counts_n ON counts(n);
'''


def db_path() -> str:
    return os.path.join(config.DATA_DIR, DB_NAME)


def ensure_data_dir():
    """Create data directory if it doesn't exist."""
    Path(config.DATA_DIR).mkdir(parents=True, exist_ok=True)


def _connect() -> sqlite3.Connection:
    ensure_data_dir()
    conn = sqlite3.connect(db_path())
    conn.row_factory = sqlite3.Row
    conn.executescript(SCHEMA)
    return conn


@contextmanager
def get_db() -> Iterator[sqlite3.Connection]:
    """One transaction on the count store; the schema exists before the block runs."""
    conn = _connect()
    try:
        with conn:
            yield conn
    finally:
        conn.close()


def init_db():
    """Create the store file and report how many rows it holds."""
    with get_db() as conn:
        rows = conn.execute('SELECT COUNT(*) FROM counts').fetchone()[0]
    config.log('Store', f"Initialized at {db_path()} ({rows} rows)")


def check_db_exists() -> bool:
    return os.path.exists(db_path())


def get_db_stats() -> Dict[str, Any]:
    """Get database statistics."""
    with get_db() as conn:
        cursor = conn.cursor()
        cursor.execute('SELECT COUNT(*), MAX(n) FROM counts')
        total, largest = cursor.fetchone()
        return {
            'records': total,
            'max_n': largest,
            'db_path': db_path(),
        }


class CountRecord:
    """Stored counts of one algebra."""

    def __init__(self, label: str, n: int, relations: List[int], tilt_count: int,
                 qhs_count: int, updated_at: Optional[str] = None):
        self.label = label
        self.n = n
        self.relations = relations
        self.tilt_count = tilt_count
        self.qhs_count = qhs_count
        self.updated_at = updated_at

    @classmethod
    def from_row(cls, row) -> Optional['CountRecord']:
        """Create CountRecord from database row."""
        if not row:
            return None
        return cls(
            label=row['label'],
            n=row['n'],
            relations=[int(r) for r in row['relations'].split(',') if r],
            tilt_count=row['tilt_count'],
            qhs_count=row['qhs_count'],
            updated_at=row['updated_at'],
        )

    @classmethod
    def get_by_label(cls, label: str) -> Optional['CountRecord']:
        with get_db() as conn:
            cursor = conn.cursor()
            cursor.execute('SELECT * FROM counts WHERE label = ?', (label,))
            return cls.from_row(cursor.fetchone())

    @classmethod
    def get_all(cls, max_n: Optional[int] = None) -> List['CountRecord']:
        """All records ordered by size, then relation list."""
        with get_db() as conn:
            cursor = conn.cursor()
            if max_n is None:
                cursor.execute('SELECT * FROM counts')
            else:
                cursor.execute('SELECT * FROM counts WHERE n <= ?', (max_n,))
            records = [cls.from_row(row) for row in cursor.fetchall()]
        return sorted(records, key=lambda r: (r.n, r.relations))

    @classmethod
    def upsert(cls, label: str, n: int, relations: List[int], tilt_count: int,
               qhs_count: int) -> 'CountRecord':
        """Insert a record or overwrite the one with the same label."""
        with get_db() as conn:
            cursor = conn.cursor()
            cursor.execute(
                '''INSERT INTO counts (label, n, relations, tilt_count, qhs_count, updated_at)
                   VALUES (?, ?, ?, ?, ?, ?)
                   ON CONFLICT(label) DO UPDATE SET
                       tilt_count = excluded.tilt_count,
                       qhs_count = excluded.qhs_count,
                       updated_at = excluded.updated_at''',
                (label, n, ','.join(map(str, relations)), tilt_count, qhs_count, datetime.now().isoformat(sep=' '))
            )
        return cls.get_by_label(label)

    def delete(self) -> bool:
        with get_db() as conn:
            cursor = conn.cursor()
            cursor.execute('DELETE FROM counts WHERE label = ?', (self.label,))
            return cursor.rowcount > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.label,
            'n': self.n,
            'relations': self.relations,
            'tilt_count': self.tilt_count,
            'qhs_count': self.qhs_count,
        }

    def to_csv_row(self) -> List[str]:
        """n, relations (space separated), tilt_count, qhs_count."""
        return [str(self.n), ' '.join(map(str, self.relations)), str(self.tilt_count), str(self.qhs_count)]
