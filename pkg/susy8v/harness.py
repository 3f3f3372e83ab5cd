# Copyright (C) 2026 The susy8v Authors.

'''Run suite tasks on a worker pool and assemble the report.'''

from concurrent.futures import ThreadPoolExecutor
import logging
import time

import numpy as np

from susy8v.linalg import InconclusiveRankError
from susy8v.report import Report, ReportDocument
from susy8v.suites import scan_tasks


VERSION = '0.1.0'


class VerificationRunner(object):
    '''Schedule the tasks of a config and run them.

    Every task draws from its own generator seeded by (seed, task index),
    so the records do not depend on the number of threads.
    '''

    def __init__(self, config, version=VERSION):
        self.config = config
        self.version = version

    def schedule(self):
        '''Return the tasks of every configured suite, in order.

        A suite that fails while scheduling contributes one error record.
        '''
        tasks, errors = [], Report()
        for name in self.config.suite:
            try:
                suite_tasks = list(scan_tasks(self.config._replace(
                    suite=[name])))
            except Exception as exc:  # pylint: disable=W0703
                errors.add_error('run', '%s: %s' % (type(exc).__name__, exc),
                                 suite=name)
                continue
            logging.info('suite %s: %d tasks', name, len(suite_tasks))
            tasks.extend(suite_tasks)
        return tasks, errors

    def run_task(self, index, task):
        '''Run one task and return its timed report.'''
        rng = np.random.default_rng([self.config.seed, index])
        logging.debug('task %d: %s %s', index, task.check, task.params)
        start = time.perf_counter()
        try:
            report = task.run(rng)
        except InconclusiveRankError as exc:
            report = Report()
            report.add_inconclusive(task.check, str(exc), **task.params)
        except Exception as exc:  # pylint: disable=W0703
            report = Report()
            report.add_error(task.check, '%s: %s' % (type(exc).__name__, exc),
                             **task.params)
        elapsed = (time.perf_counter() - start) * 1000.0
        return report.timed(elapsed)

    def run(self):
        '''Run every task and return the report document.'''
        tasks, merged = self.schedule()
        with ThreadPoolExecutor(max_workers=self.config.threads) as pool:
            reports = list(pool.map(self.run_task, range(len(tasks)), tasks))
        for report in reports:
            merged.extend(report)
        merged = merged.rescored(self.config.tolerances)
        document = ReportDocument.make(self.version, self.config.echo(),
                                       merged)
        logging.info('%d records: %s', len(merged),
                     ', '.join('%s %d' % item
                               for item in document.summary.items()))
        return document


def run_suite(config):
    '''Run the suites of config and return the report document.'''
    return VerificationRunner(config).run()
