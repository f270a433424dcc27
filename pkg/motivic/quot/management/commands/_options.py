from motives.classes import MotiveClass, parse_motive


def add_curve_arguments(parser):
    parser.add_argument("--g", type=int, default=0, help="Genus of the curve.")
    parser.add_argument("--r", type=int, default=1, help="Rank of the locally free sheaf.")


def add_class_argument(parser, help_text: str):
    parser.add_argument(
        "--class",
        dest="motive",
        default=None,
        help=f"{help_text} (point, A^d, P^n, curve(g), L^s, raw(<poly>), products with *)",
    )


def require_motive(options, what: str) -> MotiveClass:
    text = options.get("motive")
    if not text:
        raise ValueError(f"--class is required for {what}.")
    return parse_motive(text)
