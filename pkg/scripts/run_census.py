#!/usr/bin/env python3
"""
Census Reproduction Script

Runs the census for a range of dimensions, cross-checks the kernel against
the cohomology oracles on a subsample and writes the counts as CSV.

Usage:
    python scripts/run_census.py [first] [last] [output.csv]

Requirements:
    - Dimension 10 takes hours; BOTT_WORKERS controls the process count
"""

import sys
import time
from pathlib import Path

# Add src to path so we can import our modules
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from dotenv import load_dotenv
load_dotenv()


def main() -> None:
    """Run the census and store the CSV next to the printed table"""
    from bott_spinc.config import get_settings
    from bott_spinc.di_container import DIContainer
    from bott_spinc.formatting import render_census

    first = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    last = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    output = Path(sys.argv[3]) if len(sys.argv) > 3 else Path('data') / 'census.csv'

    settings = get_settings()
    container = DIContainer(settings)
    census = container.get_census_service()
    print(f'Census of dimensions {first}..{last} with {settings.workers} workers')

    try:
        start = time.time()
        rows = census.census_range(range(first, last + 1), allow_long=True)
        duration = time.time() - start

        print()
        print(render_census(rows, 'table'))
        print(f'Finished in {duration:.1f} seconds')

        for row in rows:
            mismatch = census.cross_check(row.dimension)
            status = 'ok' if mismatch is None else f'MISMATCH at index {mismatch.index}'
            print(f'   cross-check n={row.dimension}: {status}')
            if mismatch is not None:
                print(mismatch.matrix.to_text())
                sys.exit(4)

        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(render_census(rows, 'csv', timing=False))
        print(f'\nCSV written to {output}')

    except KeyboardInterrupt:
        print('\nCensus cancelled by user')
        sys.exit(1)


if __name__ == "__main__":
    main()
