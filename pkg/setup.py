'''Required to build pcolor as a package.'''

from setuptools import setup, find_packages

with open('README.md', 'r', encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='pcolor',
    version='0.1.0',
    description='Exact packing colorings, critical graphs and their structural characterizations for small graphs.',
    packages=find_packages(include=['src']),
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='GNU GPLv3',
    classifiers=['License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
                 'Programming Language :: Python :: 3.12',
                 'Operating System :: OS Independent'],
    install_requires=['numpy',
                      'graphviz',
                      'networkx'
                      ],
    extras_require={'dev': ['twine',
                            'pytest',
                            'hypothesis']
                    },
    entry_points={'console_scripts': ['pcolor=src.cli:main']},
    python_requires='>=3.12',
)
