#
# SPDX-License-Identifier: MIT
#

from setuptools import setup, find_packages
import pathlib

here = pathlib.Path(__file__).parent.resolve()

long_description = (here / 'README.md').read_text(encoding='utf-8')

setup(
    name='geospec',
    version='0.1.0',
    description='Regional specialization (RSI) and citation impact (RCI) '
    'indicators for NUTS-3 regions',
    long_description=long_description,
    long_description_content_type='text/markdown',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3 :: Only',
    ],
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'geospec': ['data/*.csv']},
    python_requires='>=3.8',
    install_requires=[
        'dask[complete]>=2021.7.1',
        'matplotlib>=3.5',
        'numpy>=1.20',
        'pandas>=1.5',
        'pyarrow>=4.0.1',
    ],
    extras_require={
        'test': ['pytest>=7'],
    },
    entry_points={
        'console_scripts': [
            'geospec=geospec.cli:console_script',
        ],
    },
)
