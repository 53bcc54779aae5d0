#!/usr/bin/env python3

from setuptools import setup, find_packages


def readme():
    with open('README.md') as f:
        return f.read()


def requirements():
    with open('requirements.txt') as f:
        return [line.strip() for line in f if line.strip()]


setup(
    name='vonroos-zero',
    version='0.1',
    description=(
        'Zero-energy separability of the von Roos position-dependent mass '
        'Hamiltonian in cylindrical coordinates'
    ),
    long_description=readme(),
    license='BSD',
    packages=find_packages(exclude=['examples', 'examples.*']),
    python_requires='>=3.7',
    install_requires=requirements(),
    entry_points={
        'console_scripts': ['vonroos-zero=vonroos_zero.cli:main'],
    },
    test_suite='vonroos_zero',
)
