from epsilon_whitehead.cli.components.tables import (
    degree_table,
    descent_table,
    epsilon_rows_table,
    verification_table,
)

__all__ = [
    "degree_table",
    "descent_table",
    "epsilon_rows_table",
    "verification_table",
]
