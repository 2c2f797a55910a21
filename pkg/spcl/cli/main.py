#!/usr/bin/env python
# -*- coding: utf-8 -*-
# -------------------------------------------------------------------
# Filename: main.py
#   Author: spcl developers
#
# Copyright (C) 2026 spcl developers
# ------------------------------------------------------------------
"""
The ``spcl`` command.

Sub-commands:

* ``solve``: value iteration on a JSON MDP, optimal values, policy and
  sub-optimality bound report,
* ``train``: path consistency learning on a tape task, with sweeps over
  modes, vocabulary sizes and seeds,
* ``eval``: evaluation of a checkpoint, trajectory dumps and replay of a
  dump,
* ``check``: invariant suites.

Exit status: 0 success, 1 usage error, 2 suite or assertion failure,
3 divergence. Results depend only on the flags, the config file and the
seed; timestamps go to ``run.log`` only.

:copyright:
    spcl developers
:license:
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from spcl.cli.config import COMMON, OPTIONS, UsageError, as_bool, resolve
from spcl.cli.suites import SUITES, run_suite
from spcl.core.exceptions import (ConvergenceError, DivergenceError, DomainError,
                                  TheoremViolation)
from spcl.envs.tape import TapeTask
from spcl.envs.wrappers import ObservationWindow
from spcl.io.ckptformat import ckptread, ckptwrite
from spcl.io.mdpformat import mdpread
from spcl.io.metricsformat import MetricsWriter, metricswrite
from spcl.io.trajformat import trajread, trajwrite
from spcl.mdp.bounds import check_bounds
from spcl.mdp.solvers import extract_policy, value_iteration
from spcl.pcl.trainer import METRICS, MODES, TrainerConfig, observation_size, train

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_FAILURE, EXIT_DIVERGED = 0, 1, 2, 3

SUMMARY = ('mode', 'vocab', 'seed', 'n_actions', 'iterations', 'env_steps',
           'final_avg_reward', 'final_max_prob', 'final_support_size', 'max_reward', 'solved',
           'status')
EVALUATION = ('episode', 'seed', 'total_reward', 'max_reward', 'steps', 'terminated')
FINAL_WINDOW = 10
# Fraction of the maximum average reward that solves a task
SOLVED_FRACTION = 0.9
MAX_REWARD_SAMPLES = 1000

HELP = {
    'solve': 'solve a tabular MDP by value iteration',
    'train': 'train with path consistency learning on a tape task',
    'eval': 'evaluate a checkpoint or replay a trajectory dump',
    'check': 'run the invariant suites',
}
POSITIONAL = {'solve': 'mdp', 'check': 'suite'}


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _help(text, default):
    return text+' (default: '+str(default).replace('%', '%%')+')'


def build_parser():
    """
    Argument parser of the ``spcl`` command.

    Options default to None so that unset flags fall back to the config
    file and then to the built-in defaults.
    """
    common = _Parser(add_help=False)
    common.add_argument('--config', default=None, help='flat key = value config file')
    common.add_argument('-v', '--verbose', action='store_true', help='debug output')
    common.add_argument('-q', '--quiet', action='store_true', help='warnings only')

    parser = _Parser(prog='spcl', description='Sparse and soft path consistency learning.')
    sub = parser.add_subparsers(dest='command', required=True)

    for command, table in OPTIONS.items():
        p = sub.add_parser(command, help=HELP[command], parents=[common])
        for key, (kind, default, text) in list(COMMON.items())+list(table.items()):
            if key == POSITIONAL.get(command):
                p.add_argument(key, nargs='?', default=None, help=_help(text, default))
            elif kind is as_bool:
                p.add_argument('--'+key.replace('_', '-'), dest=key, default=None,
                               action=argparse.BooleanOptionalAction, help=_help(text, default))
            else:
                p.add_argument('--'+key.replace('_', '-'), dest=key, default=None,
                               help=_help(text, default))
    return parser


def setup_logging(directory, verbose=False, quiet=False):
    """
    Console handler and ``run.log`` file handler on the ``spcl`` logger.

    :returns: the installed handlers
    """
    root = logging.getLogger('spcl')
    root.setLevel(logging.DEBUG)

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO)
    console.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))

    logfile = logging.FileHandler(os.path.join(directory, 'run.log'))
    logfile.setLevel(logging.DEBUG)
    logfile.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))

    for handler in (console, logfile):
        root.addHandler(handler)
    return [console, logfile]


def _split(text, kind, name):
    items = [item.strip() for item in str(text).split(',') if item.strip()]
    if not items:
        raise UsageError(name+' is empty')
    try:
        return [kind(item) for item in items]
    except ValueError:
        raise UsageError('invalid '+name+': '+repr(text))


def cmd_solve(run):
    """
    Value iteration, optimal policy and bound report.
    """
    m = mdpread(run['mdp'])
    kind, alpha = run['kind'], run['alpha']
    result = value_iteration(m, kind, alpha, run['tol'], run['max_iters'])
    policy = extract_policy(m, result.v, kind, alpha)
    logger.info('%s value iteration: %d sweeps, residual %.3e', kind, result.iterations,
                result.residual)

    metricswrite(os.path.join(run.out, 'values.csv'),
                 [{'state': x, 'v': float(value)} for x, value in enumerate(result.v)],
                 ('state', 'v'))
    actions = ['a'+str(a) for a in range(m.n_actions)]
    metricswrite(os.path.join(run.out, 'policy.csv'),
                 [dict(zip(actions, map(float, row)), state=x)
                  for x, row in enumerate(policy.probs)],
                 ['state']+actions)

    report = {'kind': kind, 'alpha': alpha, 'gamma': m.gamma, 'iterations': result.iterations,
              'residual': result.residual,
              'support_sizes': [int(size) for size in policy.support_sizes()],
              'bounds': check_bounds(m, alpha, run['tol'], strict=False).as_dict()}
    with open(os.path.join(run.out, 'report.json'), 'w') as file:
        file.write(json.dumps(report, indent=2, sort_keys=True)+'\n')
    return EXIT_OK


def _make_env(task, vocab, length, window):
    return ObservationWindow(TapeTask(task, vocab, (1, length)), window)


def expected_max_reward(task, vocab, length, samples=MAX_REWARD_SAMPLES):
    """
    Average target length, the largest average episode reward, over the
    instances of seeds ``0 .. samples-1``.
    """
    env = TapeTask(task, vocab, (1, length))
    total = 0
    for seed in range(samples):
        obs, info = env.reset(seed=seed)
        total += len(info['target'])
    return total/samples


def train_run(values, mode, vocab, seed, directory):
    """
    One training run written to its own directory.

    :returns: summary row
    """
    os.makedirs(directory, exist_ok=True)
    config = TrainerConfig.from_dict(dict(values, mode=mode, seed=seed))
    env = _make_env(values['task'], vocab, values['length'], values['window'])
    checkpoint = os.path.join(directory, 'model.ckpt')

    row = {'mode': mode, 'vocab': vocab, 'seed': seed, 'n_actions': int(env.action_space.n),
           'status': 'ok'}
    with MetricsWriter(os.path.join(directory, 'metrics.csv'), METRICS) as writer:
        log = []

        def record(metrics):
            log.append(metrics)
            writer.write(metrics)

        try:
            model = train(env, config, checkpoint=checkpoint, callback=record)[1]
        except DivergenceError:
            row['status'] = 'diverged'
            model = None

    if model is not None:
        ckptwrite(checkpoint, model,
                  extra={'task': values['task'], 'vocab': vocab, 'length': values['length'],
                         'window': values['window'], 'mode': mode, 'seed': seed,
                         'iteration': len(log)})

    tail = log[-FINAL_WINDOW:]
    for key in ('avg_reward', 'max_prob', 'support_size'):
        row['final_'+key] = float(np.mean([r[key] for r in tail])) if tail else float('nan')
    row['iterations'] = len(log)
    row['env_steps'] = log[-1]['env_steps'] if log else 0
    row['max_reward'] = expected_max_reward(values['task'], vocab, values['length'])
    row['solved'] = bool(row['status'] == 'ok'
                         and row['final_avg_reward'] >= SOLVED_FRACTION*row['max_reward'])
    return row


def cmd_train(run):
    """
    Training runs over every (mode, vocabulary size, seed) and a summary
    table.
    """
    modes = _split(run['mode'], str, 'mode')
    vocabs = _split(run['vocab'], int, 'vocab')
    if run['seeds'] < 1 or run['jobs'] < 1:
        raise UsageError('seeds and jobs must be >= 1')
    if run['min_solved'] < 0:
        raise UsageError('min_solved must be >= 0')
    for mode in modes:
        if mode not in MODES:
            raise UsageError('unknown mode '+repr(mode))
        TrainerConfig.from_dict(dict(run.values, mode=mode))
    for vocab in vocabs:
        _make_env(run['task'], vocab, run['length'], run['window'])

    runs = [(mode, vocab, run.seed+k) for mode in modes for vocab in vocabs
            for k in range(run['seeds'])]
    dirs = [os.path.join(run.out, mode+'_v'+str(vocab)+'_s'+str(seed))
            for mode, vocab, seed in runs]
    logger.info('%d training run(s) in %s', len(runs), run.out)

    if run['jobs'] > 1 and len(runs) > 1:
        with ProcessPoolExecutor(max_workers=run['jobs']) as pool:
            futures = [pool.submit(train_run, run.values, mode, vocab, seed, directory)
                       for (mode, vocab, seed), directory in zip(runs, dirs)]
            rows = [future.result() for future in futures]
    else:
        rows = [train_run(run.values, mode, vocab, seed, directory)
                for (mode, vocab, seed), directory in zip(runs, dirs)]

    metricswrite(os.path.join(run.out, 'summary.csv'), rows, SUMMARY)
    for row in rows:
        verdict = row['status'] if row['status'] != 'ok' else \
            ('solved' if row['solved'] else 'not solved')
        logger.info('%s vocab %d seed %d: final average reward %.4f, target %.4f after %d env '
                    'steps (%s)', row['mode'], row['vocab'], row['seed'],
                    row['final_avg_reward'], SOLVED_FRACTION*row['max_reward'],
                    row['env_steps'], verdict)

    # Solved seeds per (mode, vocabulary) and mode comparison per vocabulary
    short = []
    for vocab in vocabs:
        means = {}
        for mode in modes:
            group = [row for row in rows if row['mode'] == mode and row['vocab'] == vocab]
            solved = sum(row['solved'] for row in group)
            means[mode] = float(np.mean([row['final_avg_reward'] for row in group]))
            logger.info('%s vocab %d: solved in %d of %d seeds', mode, vocab, solved, len(group))
            if solved < run['min_solved']:
                short.append(mode+' vocab '+str(vocab))
        if len(modes) > 1:
            logger.info('vocab %d: mean final average reward %s', vocab,
                        ', '.join(mode+' %.4f' % means[mode] for mode in modes))

    if any(row['status'] == 'diverged' for row in rows):
        logger.error('training diverged, see the metrics of the affected runs')
        return EXIT_DIVERGED
    if short:
        logger.error('fewer than %d solved seeds: %s', run['min_solved'], ', '.join(short))
        return EXIT_FAILURE
    return EXIT_OK


def _replay(fname):
    """
    Replay a trajectory dump against a fresh environment.
    """
    header, steps = trajread(fname)
    if header['length'] is None:
        env = TapeTask(header['kind'], header['vocab'])
    else:
        env = TapeTask(header['kind'], header['vocab'], (1, header['length']))
    obs, info = env.reset(seed=header['seed'])
    mismatches = 0
    for t, expected, action, reward, done in steps:
        if env.done:
            mismatches += 1
            break
        got, got_reward, terminated, truncated, info = env.step(action)
        if obs != expected or got_reward != reward or (terminated or truncated) != done:
            logger.warning('replay mismatch at step %d', t)
            mismatches += 1
        obs = got
    result = {'replay': os.path.basename(fname), 'steps': len(steps),
              'mismatches': mismatches, 'passed': mismatches == 0}
    print(json.dumps(result, sort_keys=True))
    return EXIT_OK if mismatches == 0 else EXIT_FAILURE


def cmd_eval(run):
    """
    Evaluation episodes of a checkpoint, one trajectory dump per episode.
    """
    if run['replay'] is not None:
        return _replay(run['replay'])
    if run['checkpoint'] is None:
        raise UsageError('eval needs --checkpoint or --replay')

    model, header = ckptread(run['checkpoint'])
    extra = header.get('extra', {})
    setup = {}
    for key in ('task', 'vocab', 'length', 'window'):
        setup[key] = run[key] if run[key] is not None else extra.get(key)
        if setup[key] is None:
            raise UsageError('--'+key+' is not stored in the checkpoint and must be given')
    env = _make_env(setup['task'], setup['vocab'], setup['length'], setup['window'])
    if (model.n_actions != env.action_space.n
            or model.obs_dim != observation_size(env.observation_space)):
        raise UsageError('the checkpoint does not match the task')

    rng = np.random.default_rng(run.seed)
    directory = os.path.join(run.out, 'trajectories')
    os.makedirs(directory, exist_ok=True)
    rows = []
    for i in range(run['episodes']):
        seed = run.seed+i
        x, info = env.reset(seed=seed)
        raw = info['raw_observation']
        steps, total, done = [], 0., False
        while not done:
            mu = model.forward(x).mu[0]
            if run['greedy']:
                action = int(np.argmax(mu))
            else:
                action = min(int(np.searchsorted(np.cumsum(mu), rng.random(), side='right')),
                             mu.size-1)
            x, reward, terminated, truncated, info = env.step(action)
            done = terminated or truncated
            steps.append((len(steps), raw, action, reward, done))
            raw = info['raw_observation']
            total += reward
        trajwrite(os.path.join(directory, 'episode_%03d.csv' % i), steps, setup['task'],
                  setup['vocab'], seed, setup['length'])
        rows.append({'episode': i, 'seed': seed, 'total_reward': total,
                     'max_reward': int(len(env.unwrapped.target)), 'steps': len(steps),
                     'terminated': int(terminated)})

    metricswrite(os.path.join(run.out, 'eval.csv'), rows, EVALUATION)
    rewards = np.array([row['total_reward'] for row in rows])
    best = np.array([row['max_reward'] for row in rows])
    summary = {'episodes': len(rows),
               'avg_reward': float(rewards.mean()) if rows else 0.,
               'solved': float(np.mean(rewards == best)) if rows else 0.}
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def cmd_check(run):
    """
    Invariant suites, one JSON line each.
    """
    suite = run['suite']
    names = SUITES if suite == 'all' else (suite,)
    if suite != 'all' and suite not in SUITES:
        raise UsageError('unknown suite '+repr(suite))
    if run['trials'] < 1:
        raise UsageError('trials must be >= 1')

    lines = []
    for name in names:
        result = run_suite(name, run['trials'], run.seed)
        lines.append(json.dumps(result.as_dict(), sort_keys=True))
        print(lines[-1])
    with open(os.path.join(run.out, 'check.jsonl'), 'w') as file:
        file.write('\n'.join(lines)+'\n')
    return EXIT_OK if all(json.loads(line)['passed'] for line in lines) else EXIT_FAILURE


COMMANDS = {'solve': cmd_solve, 'train': cmd_train, 'eval': cmd_eval, 'check': cmd_check}


def main(argv=None):
    """
    Entry point of the ``spcl`` command.

    :param argv: arguments, ``sys.argv[1:]`` by default
    :returns: exit status
    """
    try:
        args = build_parser().parse_args(argv)
        flags = {key: value for key, value in vars(args).items()
                 if key not in ('command', 'config', 'verbose', 'quiet')}
        run = resolve(args.command, flags, args.config)
        os.makedirs(run.out, exist_ok=True)
    except (UsageError, OSError) as err:
        print('spcl: error: '+str(err), file=sys.stderr)
        return EXIT_USAGE

    handlers = setup_logging(run.out, args.verbose, args.quiet)
    try:
        run.write(run.out)
        return COMMANDS[run.command](run)
    except DivergenceError as err:
        logger.error('diverged: %s', err)
        return EXIT_DIVERGED
    except (ConvergenceError, TheoremViolation) as err:
        logger.error('%s', err)
        return EXIT_FAILURE
    except (UsageError, DomainError, OSError) as err:
        logger.error('%s', err)
        return EXIT_USAGE
    finally:
        root = logging.getLogger('spcl')
        for handler in handlers:
            root.removeHandler(handler)
            handler.close()


if __name__ == '__main__':
    sys.exit(main())
