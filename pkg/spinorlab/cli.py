# cli.py
import click
import sys

from . import __version__ as spinorlab_version

from .algebra.gamma import REPRESENTATIONS
from .lib.bootstrap import logger
from .lib.config import SUITES, load_settings
from .lib.errors import EXIT_IO, SpinorlabError
from .lib.utils import BorderColor, catch_error_and_exit, parse_vector, print_unicode_box

#
# utility functions
#

def parse_env_var(ctx, param, value):
    """Parse environment variable options given as 'KEY=VALUE'."""
    env_vars = {}
    if value:
        for item in value:
            try:
                key, val = item.split('=', 1)
                env_vars[key] = val
            except ValueError:
                raise click.BadParameter('environment variables must be formatted as KEY=VALUE')
    return env_vars


def parse_complex(ctx, param, value):
    if value is None:
        return None
    try:
        return complex(value.replace(' ', ''))
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a complex number (use forms like 1, 0.5j or 1+2j)")


def parse_three_vector(ctx, param, value):
    return None if value is None else parse_vector(value, 3, param.name)


def parse_even(ctx, param, value):
    return None if value is None else parse_vector(value, 8, param.name)


def setup_logger(command, args_dict):
    log_level = args_dict.get('log_level', 'INFO').upper()
    valid_levels = {'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'}

    if log_level not in valid_levels:
        raise click.ClickException(
            f"Invalid log level: {log_level}. Valid levels are: {', '.join(sorted(valid_levels))}"
        )

    logger.setLevel(log_level)
    logger.debug(f"'{command}' command called with args: {str(args_dict)}")


def add_common_options(command):
    common_options = [
        click.option('--log-level', default='INFO', help='set the logging level.'),
        click.option('--env-file', default='.env', help='environment variables file.'),
        click.option(
            '-e',
            '--env',
            multiple=True,
            callback=parse_env_var,
            help='set additional environment variables (SPINORLAB_TOLERANCE, SPINORLAB_REP, SPINORLAB_SEED).'
        ),
        click.option('--config', 'config_path', default=None, type=click.Path(dir_okay=False),
                     help='settings file, defaults to ./spinorlab.yml when present.'),
        click.option('--rep', type=click.Choice(REPRESENTATIONS), default=None,
                     help='gamma representation for inputs without a tag and for outputs.'),
        click.option('--tol', 'tolerance', type=float, default=None, help='zero-test tolerance.'),
        click.option('--seed', type=int, default=None, help='random seed.'),
        click.option('--json/--table', 'as_json', default=True, help='report format.'),
        click.option('--output', default=None, help='write the report to a file instead of stdout.'),
    ]
    for option in common_options:
        command = option(command)
    return command

#
# main entry point
#

@click.group()
@click.version_option(spinorlab_version, prog_name='spinorlab')
@click.pass_context
def cli(ctx):
    """Bilinear covariants, Lounesto classes, ELKO and Hopf projections of Dirac spinors."""
    ctx.ensure_object(dict)


def setup_command_context(command_name, args):
    """Common initialization for commands: logger and effective settings."""
    setup_logger(command_name, args)
    try:
        settings = load_settings(
            logger,
            config_path=args.get('config_path'),
            env_file=args.get('env_file'),
            env_overrides=args.get('env'),
            cli_values={'tolerance': args.get('tolerance'), 'rep': args.get('rep'), 'seed': args.get('seed')},
        )
    except SpinorlabError as e:
        catch_error_and_exit(str(e), logger, e.exit_code)
    logger.debug(f"effective settings: {settings.as_dict()}")
    return settings


def run_command(runner, completion, *args, **kwargs):
    """Run a command runner, mapping library errors to exit codes."""
    try:
        runner.run(*args, **kwargs)
    except SpinorlabError as e:
        catch_error_and_exit(str(e), logger, e.exit_code)
    except ValueError as e:
        catch_error_and_exit(str(e), logger, EXIT_IO)
    click.echo(completion, err=True)
    if runner.exit_code:
        sys.exit(runner.exit_code)

#
# classify command
#

@cli.command()
@click.argument('input_path', metavar='INPUT')
@add_common_options
@click.option('--with-mapping', is_flag=True, help='include the Dirac to ELKO mapping conditions.')
@click.option('--with-hopf', is_flag=True, help='include the Hopf point of the normalized spinor.')
def classify(input_path, log_level, env_file, env, config_path, rep, tolerance, seed, as_json, output,
             with_mapping, with_hopf):
    """Classify spinors from a JSON lines or CSV file into Lounesto classes."""

    from .cmd.classify import SpinorClassifier

    settings = setup_command_context('classify', locals())
    print_unicode_box(f"Classifying spinors from: [{input_path}]", BorderColor.YELLOW, err=True)
    run_command(SpinorClassifier(settings, logger), "🏷️  classify complete",
                input_path, output, not as_json, with_mapping, with_hopf)

#
# make command
#

@cli.command()
@click.argument('family', type=click.Choice(['elko', 'majorana', 'weyl', 'dirac', 'flagdipole']))
@add_common_options
@click.option('--alpha', default='1', callback=parse_complex, help='first Weyl component.')
@click.option('--beta', default='0', callback=parse_complex, help='second Weyl component.')
@click.option('--conjugacy', type=click.Choice(['self', 'anti']), default='self', help='ELKO conjugacy.')
@click.option('--helicity', type=click.Choice(['+', '-']), default=None,
              help='ELKO lower-block helicity along the momentum (needed when boosting).')
@click.option('--p', 'momentum', default='0,0,0', callback=parse_three_vector, help='momentum "px,py,pz".')
@click.option('--m', 'mass', type=float, default=1.0, help='mass.')
@click.option('--u', 'direction', default='0,0,1', callback=parse_three_vector,
              help='flag-dipole spatial direction "ux,uy,uz".')
@click.option('--psi', 'psi_even', default=None, callback=parse_even,
              help='flag-dipole even element "c,c01,c02,c03,c12,c13,c23,c0123", defaults to 1.')
@click.option('--epsilon', type=click.Choice(['1', '-1']), default='1', help='sign of the Dirac right-handed block.')
@click.option('--handedness', type=click.Choice(['left', 'right']), default='left', help='Weyl block.')
@click.option('--random', 'count', type=click.IntRange(min=1), default=None,
              help='draw this many seeded random spinors of the family instead.')
def make(family, log_level, env_file, env, config_path, rep, tolerance, seed, as_json, output,
         alpha, beta, conjugacy, helicity, momentum, mass, direction, psi_even, epsilon, handedness, count):
    """Construct spinor documents of a named family."""

    from .cmd.make import SpinorFactory

    settings = setup_command_context('make', locals())
    print_unicode_box(f"Making {family} spinors", BorderColor.BLUE, err=True)
    run_command(
        SpinorFactory(settings, logger), f"🧪 make {family} complete",
        family, output, not as_json, count,
        alpha=alpha, beta=beta, conjugacy=conjugacy, helicity=helicity, p=momentum, m=mass,
        u=direction, epsilon=int(epsilon), handedness=handedness, psi_even=psi_even,
    )

#
# verify command
#

@cli.command()
@click.argument('suite', type=click.Choice(SUITES + ('all',)))
@add_common_options
@click.option('--samples', type=click.IntRange(min=1), default=None, help='samples per suite.')
def verify(suite, log_level, env_file, env, config_path, rep, tolerance, seed, as_json, output, samples):
    """Run a seeded verification suite."""

    from .cmd.verify import SuiteRunner

    settings = setup_command_context('verify', locals())
    print_unicode_box(f"Verifying suite: [{suite}] (seed {settings.seed})", BorderColor.YELLOW, err=True)
    run_command(SuiteRunner(settings, logger), f"🔍 verify {suite} complete", suite, samples, output, not as_json)

#
# hopf command
#

@cli.command()
@click.argument('input_path', metavar='INPUT')
@add_common_options
def hopf(input_path, log_level, env_file, env, config_path, rep, tolerance, seed, as_json, output):
    """Project spinors onto S4 through the quaternionic Hopf map."""

    from .cmd.hopf import HopfProjector

    settings = setup_command_context('hopf', locals())
    print_unicode_box(f"Hopf projection of: [{input_path}]", BorderColor.YELLOW, err=True)
    run_command(HopfProjector(settings, logger), "🌐 hopf complete", input_path, output, not as_json)

#
# map-check command
#

@cli.command('map-check')
@click.argument('input_path', metavar='INPUT')
@add_common_options
def map_check(input_path, log_level, env_file, env, config_path, rep, tolerance, seed, as_json, output):
    """Evaluate the Dirac to ELKO mapping conditions."""

    from .cmd.map_check import MappingChecker

    settings = setup_command_context('map-check', locals())
    print_unicode_box(f"Mapping conditions for: [{input_path}]", BorderColor.YELLOW, err=True)
    run_command(MappingChecker(settings, logger), "🧭 map-check complete", input_path, output, not as_json)

#
# info command
#

@cli.command()
@click.option('--env-file', default='.env', help='environment variables file.')
@click.option('-e', '--env', multiple=True, callback=parse_env_var, help='set additional environment variables.')
@click.option('--config', 'config_path', default=None, type=click.Path(dir_okay=False), help='settings file.')
def info(env_file, env, config_path):
    """Display version information and the effective settings."""
    try:
        settings = load_settings(logger, config_path=config_path, env_file=env_file, env_overrides=env)
    except SpinorlabError as e:
        catch_error_and_exit(str(e), logger, e.exit_code)

    import numpy

    click.echo(click.style("spinorlab CLI", fg="green", bold=True))
    click.echo(f"  Version: {spinorlab_version}")
    click.echo(f"  numpy Version: {numpy.__version__}\n")

    click.echo(click.style("Effective Settings", fg="green", bold=True))
    click.echo(f"  Tolerance: {settings.tolerance:g}")
    click.echo(f"  Marginal Factor: {settings.marginal_factor:g}")
    click.echo(f"  Representation: {settings.rep}")
    click.echo(f"  Seed: {settings.seed}")
    for suite in SUITES:
        click.echo(f"  Samples ({suite}): {settings.samples_for(suite)}")
