#!/usr/bin/env python3

import os

from setuptools import setup
from setuptools import find_packages


def local_file(name):
    return os.path.relpath(os.path.join(os.path.dirname(__file__), name))


SOURCE = local_file('src')
README = local_file('README.md')

# Assignment to placate pyflakes. The actual version is from the exec that
# follows.
__version__ = None

with open(local_file('src/curvedim/version.py')) as o:
    exec(o.read())

assert __version__ is not None

install_requires = [
    "attrs >= 20.3.0",
    "cattrs >= 1.4.0,<2",
    'click >= 7.1.2',
    'pyyaml >= 5.3.1',
    "sympy >= 1.7",
    "tabulate >= 0.8.7, < 0.9"
]

setup(
    name='curvedim',
    version=__version__,
    description='Exact dimension bounds for Hilbert schemes of curves in P^3, P^4 and on the quadric threefold',
    long_description=open(README).read(),
    long_description_content_type='text/markdown',
    license='MIT',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=find_packages(SOURCE),
    package_dir={'': SOURCE},
    install_requires=install_requires,
    python_requires='>=3.8',

    entry_points={
        'console_scripts': [
            'curvedim=curvedim:main',
        ],
    },
)
