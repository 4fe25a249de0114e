"""Arguments shared by several sub-commands."""
from utils.Parsers import ParseOverride


def add_config_arguments(parser, config_default="default"):
    parser.add_argument(
        "--config",
        default=config_default,
        help="preset name in run_config/ or path to a JSON file (default: %(default)s)",
    )
    parser.add_argument("--seed", type=int, help="base seed, overrides 'seed'")
    parser.add_argument(
        "--approach", type=int, choices=(1, 2), help="obstacle-avoidance approach"
    )
    parser.add_argument(
        "--set",
        action="append",
        type=ParseOverride,
        metavar="KEY=VALUE",
        help="override any configuration key, e.g. td3.batch_size=64 (repeatable)",
    )


def add_perturbation_arguments(parser):
    parser.add_argument("--current", action="store_true", help="enable the ocean current")
    parser.add_argument(
        "--delay", action="store_true", help="enable the acoustic communication delay"
    )
    parser.add_argument(
        "--nav-error", action="store_true", help="enable navigation errors"
    )
