#!/usr/bin/env python3

from setuptools import setup

setup(
    name='susy8v',
    version='0.1.0',
    description=('Verify the supersymmetric eight-vertex model on a strip '
                 'by exact diagonalization'),
    author='The susy8v Authors',
    license='GNU GPLv3',
    packages=['susy8v', 'susy8v/suites'],
    scripts=['bin/susy8v'],
    install_requires=['numpy', 'scipy', 'PyYAML'],
    extras_require={'test': ['mpmath', 'coverage']},
)
