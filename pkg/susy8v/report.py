# Copyright (C) 2026 The susy8v Authors.

'''Verification records, reports and their writers.'''

from collections import namedtuple, OrderedDict
import csv
import json
import logging
import math
import numbers

import numpy as np

from susy8v.claims import citation


PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'

# A residual must stay below the tolerance ("below") or, for negative
# controls and positivity margins, exceed it ("above").
BELOW = 'below'
ABOVE = 'above'

CSV_HEADER = ('check', 'citation', 'params', 'residual', 'tol', 'status',
              'ms')

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def score(residual, tol, direction):
    '''Return the status of residual against tol.'''
    if residual is None or math.isnan(residual):
        return FAIL
    if direction == BELOW:
        return PASS if residual < tol else FAIL
    return PASS if residual > tol else FAIL


class Record(namedtuple('Record', '''
        check
        citation
        params
        residual
        tol
        status
        ms
        direction
        ''')):
    '''One verified (or refuted) claim at one parameter point.'''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, check, residual, tol, params=None, direction=BELOW,
             status=None):
        '''Create a record and score it unless status is given.'''
        residual = float(np.real(residual))
        if status is None:
            status = score(residual, tol, direction)
        return cls(check=check,
                   citation=citation(check),
                   params=OrderedDict(sorted((params or {}).items())),
                   residual=residual,
                   tol=float(tol),
                   status=status,
                   ms=0.0,
                   direction=direction)

    def rescore(self, tol):
        '''Return a copy scored against a new tolerance.'''
        if self.status == INCONCLUSIVE:
            return self._replace(tol=float(tol))
        return self._replace(tol=float(tol),
                             status=score(self.residual, tol,
                                          self.direction))


class Report(list):
    '''A list of records produced by one check.'''

    def add(self, check, residual, tol, direction=BELOW, **params):
        '''Append a record for an identity that must hold.'''
        record = Record.make(check, residual, tol, params=params,
                             direction=direction)
        if record.status != PASS:
            logging.info('%s failed: residual %.3e vs tol %.1e %s',
                         check, record.residual, tol, _format_params(params))
        self.append(record)
        return record

    def add_control(self, check, residual, tol, given=None, **params):
        '''Append a negative control whose residual must exceed tol.

        given lists the records of the identity under control; unless all
        of them pass, the control is recorded inconclusive.
        '''
        if given is not None and not all(record.status == PASS
                                         for record in given):
            return self.add_inconclusive(
                check, 'controlled identity did not pass', **params)
        return self.add(check, residual, tol, direction=ABOVE, **params)

    def add_inconclusive(self, check, message, **params):
        '''Append an inconclusive record.'''
        params['message'] = message
        record = Record.make(check, float('nan'), 0.0, params=params,
                             status=INCONCLUSIVE)
        logging.warning('%s inconclusive: %s', check, message)
        self.append(record)
        return record

    def add_error(self, check, message, **params):
        '''Append a failed record for a check that raised.'''
        params['message'] = message
        record = Record.make(check + '.error', float('nan'), 0.0,
                             params=params, status=FAIL)
        logging.warning('%s raised: %s', check, message)
        self.append(record)
        return record

    @property
    def passed(self):
        '''True if every record passes.'''
        return all(record.status == PASS for record in self)

    def timed(self, ms):
        '''Return a report with ms set on every record.'''
        return Report(record._replace(ms=float(ms)) for record in self)

    def rescored(self, tolerances):
        '''Return a report with tolerance overrides applied by check name.'''
        if not tolerances:
            return Report(self)
        return Report(record.rescore(tolerances[record.check])
                      if record.check in tolerances else record
                      for record in self)

    def summary(self):
        '''Count records by status.'''
        counts = OrderedDict([(PASS, 0), (FAIL, 0), (INCONCLUSIVE, 0)])
        for record in self:
            counts[record.status] += 1
        return counts


def _format_params(params):
    '''Render params for a log line.'''
    return ' '.join('%s=%s' % (key, params[key]) for key in sorted(params))


def exit_status(summary):
    '''Map summary counts to the process exit status.'''
    if summary[FAIL]:
        return EXIT_FAIL
    if summary[INCONCLUSIVE]:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def plain(value):
    '''Convert numpy and complex values into JSON-friendly ones.'''
    if isinstance(value, (str, bool)) or value is None:
        return value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        value = float(value)
        return None if math.isnan(value) else value
    if isinstance(value, numbers.Complex):
        value = complex(value)
        if value.imag == 0.0:
            return value.real
        return OrderedDict([('re', value.real), ('im', value.imag)])
    if isinstance(value, dict):
        return OrderedDict((key, plain(value[key])) for key in value)
    if isinstance(value, (list, tuple, np.ndarray)):
        return [plain(item) for item in value]
    return str(value)


class ReportDocument(namedtuple('ReportDocument',
                                'version config records summary')):
    '''Everything one run writes out.'''

    # pylint: disable=E1101,W0232

    @classmethod
    def make(cls, version, config, report):
        '''Assemble a document from a merged report.'''
        return cls(version=version, config=config, records=report,
                   summary=report.summary())

    @property
    def exit_status(self):
        '''Process exit status for this document.'''
        return exit_status(self.summary)

    def to_json_data(self):
        '''Return the JSON tree.'''
        records = [OrderedDict([('check', record.check),
                                ('citation', record.citation),
                                ('params', plain(record.params)),
                                ('residual', plain(record.residual)),
                                ('tol', record.tol),
                                ('status', record.status),
                                ('ms', round(record.ms, 3))])
                   for record in self.records]
        return OrderedDict([('version', self.version),
                            ('config', plain(self.config)),
                            ('records', records),
                            ('summary', OrderedDict(self.summary))])

    def write_json(self, output):
        '''Write the document as JSON.'''
        json.dump(self.to_json_data(), output, indent=2)
        output.write('\n')

    def write_csv(self, output):
        '''Write one record per row.'''
        writer = csv.writer(output, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for record in self.records:
            writer.writerow((record.check,
                             record.citation,
                             json.dumps(plain(record.params),
                                        sort_keys=True),
                             _format_number(record.residual),
                             _format_number(record.tol),
                             record.status,
                             '%.3f' % record.ms))

    def write(self, output, fmt):
        '''Write the document in fmt (json or csv).'''
        {'json': self.write_json, 'csv': self.write_csv}[fmt](output)


def _format_number(value):
    '''Full double precision.'''
    return '%.17g' % value


def format_matrix(matrix, output, csv_mode=False, precision=6):
    '''Print a (possibly complex) matrix or vector.'''
    matrix = np.atleast_2d(np.asarray(matrix))
    if matrix.shape[0] == 1 and matrix.ndim == 2 and not csv_mode:
        matrix = matrix.T
    if csv_mode:
        writer = csv.writer(output, lineterminator='\n')
        for row in matrix:
            writer.writerow([_format_entry(entry, 17) for entry in row])
        return
    cells = [[_format_entry(entry, precision) for entry in row]
             for row in matrix]
    width = max(len(cell) for row in cells for cell in row)
    for row in cells:
        output.write(' '.join(cell.rjust(width) for cell in row))
        output.write('\n')


def _format_entry(entry, digits):
    '''Format a real or complex number.'''
    entry = complex(entry)
    if entry.imag == 0.0:
        return '%.*g' % (digits, entry.real)
    return '%.*g%+.*gj' % (digits, entry.real, digits, entry.imag)
