import logging
import sys
from logging.config import fileConfig

import click
from click_plugins import with_plugins
from pkg_resources import iter_entry_points, resource_filename

from diary_embed import defaults, pipeline

fileConfig(resource_filename(__name__, 'log_config.ini'))
logger = logging.getLogger(defaults.NAME)


def run_options(func):
    """
    The flags shared by every subcommand. Flags left out fall back to the config file, then to the defaults.
    """
    options = [
        click.option('-c', '--config-file', default=None, help='Flat config file, in yaml, mirroring the flags'),
        click.option('--radius', type=int, help=f'Ball radius of the sweep [default: {defaults.RADIUS}]'),
        click.option('--samples', type=int, help='Number of seeded random pairs added to the sweep'),
        click.option('--seed', type=int, help='Seed of the random pairs'),
        click.option('--mode', type=click.Choice([defaults.MODE_PAPER, defaults.MODE_CUSTOM]),
                     help=f'Embedding constants [default: {defaults.MODE_CUSTOM} for '
                          f'{" and ".join(defaults.CUSTOM_MODE_COMMANDS)}, {defaults.MODE_PAPER} otherwise]'),
        click.option('--kappa', type=int, help='Page limit of Alice\'s Diary (custom mode, or the diary command)'),
        click.option('--out', default=None, help='Path prefix of the record files, nothing is written if absent'),
        click.option('--format', 'output_format', type=click.Choice(['jsonl', 'csv']),
                     help=f'Format of the record files [default: {defaults.OUTPUT_FORMAT}]'),
        click.option('--processes', type=int, help='Number of worker processes of the sweep'),
        click.option('--log-level', default=None, help=f'The log level [default: {defaults.LOG_LEVEL}]',
                     type=click.Choice(['INFO', 'DEBUG', 'WARNING', 'ERROR', 'FATAL'])),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run(command: str, arguments=(), **kwargs):
    kwargs['format'] = kwargs.pop('output_format', None)
    logger.setLevel(kwargs.get('log_level') or defaults.LOG_LEVEL)
    outcome = pipeline.execute(command, arguments=arguments, configuration_file=kwargs.pop('config_file', None),
                               **kwargs)
    for line in outcome.lines:
        if outcome.status == defaults.EXIT_CONFIG_ERROR:
            click.echo(line, err=True)
        else:
            click.echo(line)
    sys.exit(outcome.status)


@with_plugins(iter_entry_points('diary_embed.cli_plugins'))
@click.group()
@click.version_option()
def cli():
    """
    Diaries, statistics and the embedding of the hexagon group into a product of binary trees.
    All commands have options that you can see by diary-embed <command> --help
    """
    pass


@cli.command('reduce', short_help='Shortlex normal form of a word')
@click.argument('word', nargs=-1, required=True)
@run_options
def reduce(word, **kwargs):  # pragma: no cover
    """
    Print the shortlex normal form of WORD, for example: diary-embed reduce "a1 b2 a1"
    """
    run('reduce', word, **kwargs)


@cli.command('normal-form', short_help='Normal form or side-left representation')
@click.argument('word', nargs=-1, required=True)
@click.option('--side', type=click.Choice(['a', 'b']), default=None, help='Print the side-left representation')
@run_options
def normal_form(word, **kwargs):  # pragma: no cover
    """
    Print the normal form of WORD, or its side-left representation and its sentence.
    """
    run('normal-form', word, **kwargs)


@cli.command('ball', short_help='Enumerate a ball of the Cayley graph')
@run_options
def ball(**kwargs):  # pragma: no cover
    """
    Enumerate the ball of --radius and compare its spheres with the growth series.
    """
    run('ball', **kwargs)


@cli.command('embed', short_help='Embed one element')
@click.argument('word', nargs=-1, required=True)
@run_options
def embed(word, **kwargs):  # pragma: no cover
    """
    Print the sentences, the diary images and the binary recoding of the element WORD.
    """
    run('embed', word, **kwargs)


@cli.command('diary', short_help='Diary of a sentence')
@click.argument('sentence', nargs=-1, required=True)
@click.option('--diary', type=click.Choice(['alice', 'appendix']), default=None,
              help='Alice\'s Diary of page limit --kappa, or the Leo + Virgo diary [default: alice]')
@run_options
def diary(sentence, **kwargs):  # pragma: no cover
    """
    Print the diary of SENTENCE, for example: diary-embed diary --kappa 3 "abac|cb|accc|bcbc|a"
    """
    run('diary', sentence, **kwargs)


@cli.command('isometry', short_help='Check the isometry of F over a ball')
@run_options
def isometry(**kwargs):  # pragma: no cover
    """
    Check that F_A x F_B preserves distances on every pair of the sweep.
    """
    run('isometry', **kwargs)


@cli.command('distort', short_help='Distortion sweep')
@run_options
def distort(**kwargs):  # pragma: no cover
    """
    Measure d_image / d_group over the pairs of the sweep and summarize.
    """
    run('distort', **kwargs)


@cli.command('classify', short_help='Criterion census')
@run_options
def classify(**kwargs):  # pragma: no cover
    """
    Count the pairs of the sweep satisfying each criterion.
    """
    run('classify', **kwargs)


@cli.command('selftest', short_help='Run the oracle checks')
@click.option('--failures-file', default=None,
              help=f'Where counterexamples are appended [default: {defaults.FAILURES_FILE}]')
@run_options
def selftest(**kwargs):  # pragma: no cover
    """
    Run every oracle and property check, exit 1 on any failure.
    """
    run('selftest', **kwargs)


# Needed for the debugger to find the cli
if __name__ == '__main__':
    cli()
