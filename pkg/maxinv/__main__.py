import argparse
import json
import logging
import os
import sys
from typing import Optional

from maxinv import config, exceptions
from maxinv.backend import load
from maxinv.campaign import analyze, run_campaign, run_checkers
from maxinv.checkers import CHECKERS
from maxinv.report import exit_code

parser = argparse.ArgumentParser('maxinv')
parser.add_argument('--cap', type=int, help=f'order cap (default ${config.ORDER_CAP_ENV} or {config.DEFAULT_ORDER_CAP})')
parser.add_argument('--log-level', default='WARNING', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
subparsers = parser.add_subparsers(dest='command', required=True)

analyze_parser = subparsers.add_parser('analyze', help='structural facts and theorem verdicts for one group')
analyze_parser.add_argument('--group', required=True)
analyze_parser.add_argument('--action')

verify_parser = subparsers.add_parser('verify', help='run one checker on one group')
verify_parser.add_argument('checker')
verify_parser.add_argument('--group', required=True)
verify_parser.add_argument('--action')

campaign_parser = subparsers.add_parser('campaign', help='run every checker on the standard campaign')
campaign_parser.add_argument('--max-order', type=int, required=True)
campaign_parser.add_argument('--out', required=True)
campaign_parser.add_argument('--jobs', type=int, default=os.cpu_count())


def _read(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    with open(path, 'r', encoding='utf-8') as fp:
        return fp.read()


def _describe(error: Exception) -> str:
    if isinstance(error, SyntaxError):
        return f'{error.filename}:{error.lineno}:{error.offset}: {error.msg}\n    {error.text}'
    return str(error)


def main(argv: Optional[list[str]] = None) -> int:
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    if args.cap is not None:
        os.environ[config.ORDER_CAP_ENV] = str(args.cap)
    if args.command == 'verify' and args.checker not in CHECKERS:
        print(f'unknown checker {args.checker!r}; expected one of {", ".join(CHECKERS)}', file=sys.stderr)
        return 2
    try:
        if args.command == 'campaign':
            with open(args.out, 'w', encoding='utf-8') as fp:
                report = run_campaign(args.max_order, args.jobs)
                fp.write(report.to_json())
            print(f'{report.summary["entries"]} entries, {report.failures} failures')
            return 1 if report.failures else 0
        G, A = load(_read(args.group), _read(args.action), args.group, args.action or 'trivial')
        if args.command == 'analyze':
            sys.stdout.write(analyze(G, A).to_json())
            return 0
        results = run_checkers(G, A, [args.checker])
        code = exit_code(results)
        if code == 1:
            failing = [result for result in results if result.failed]
            print(json.dumps([vars(result) for result in failing], sort_keys=True, indent=2))
        else:
            for result in results:
                print(f'{result.checker}: {result.status}')
        return code
    except (SyntaxError, exceptions.GroupError, OSError) as e:
        print(_describe(e), file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
