"""
Analysis Module

## Files

- `bounds.py` - Match probability bound, nice-case count, log counts per variant
"""

from .bounds import nice_case_count, prob_lower_bound, theoretical_log_counts

__all__ = ['prob_lower_bound', 'nice_case_count', 'theoretical_log_counts']
