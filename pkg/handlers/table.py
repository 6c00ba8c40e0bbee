from data.config import Config
from misc.constructions import ex_fan, f_chvatal_hanson
from misc.utils import emit, parse_range, print_table


def ex_rows(ns: list[int], ks: list[int]) -> list[dict]:
    rows = []
    for n in ns:
        for k in ks:
            value = ex_fan(n, k)
            rows.append({"n": n, "k": k, "value": value.value, "in_proven_range": value.in_proven_range})
    return rows


def f_rows(betas: list[int], deltas: list[int]) -> list[dict]:
    return [{"beta": beta, "delta": delta, "value": f_chvatal_hanson(beta, delta)}
            for beta in betas for delta in deltas]


async def cmd_table(args, cfg: Config) -> int:
    if args.what == "ex":
        rows = ex_rows(parse_range(args.n), parse_range(args.k))
    else:
        rows = f_rows(parse_range(args.beta), parse_range(args.delta))
    # CSV unless a format was asked for
    output_format = cfg.output_format if args.format_given else "csv"
    if output_format in ("json", "graph6"):
        for row in rows:
            emit(row)
    else:
        print_table(rows, output_format)
    return 0


def register(subparsers, parents):
    parser = subparsers.add_parser("table", parents=parents, help="tabulate ex(n, F_k) or f(beta, delta)")
    parser.add_argument("what", choices=("ex", "f"))
    parser.add_argument("--n", default="50", help="orders, e.g. 100 or 50..60")
    parser.add_argument("--k", default="1", help="fan sizes, e.g. 1..4")
    parser.add_argument("--beta", default="1", help="matching bounds, e.g. 1..3")
    parser.add_argument("--delta", default="1", help="degree bounds, e.g. 1..3")
    parser.set_defaults(handler=cmd_table)
