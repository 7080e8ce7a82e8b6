import setuptools
import sys, os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'fractal_nets'))
from version import VERSION

setuptools.setup(name='fractal-nets',
      version=VERSION,
      description='fractal-nets: seed-reproducible fractal network models, box-covering analysis and transition experiments.',
      packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
      include_package_data=True,
      package_data={'fractal_nets': ['utils/model_parameters/*.yaml']},
      classifiers=[
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: 3.8',
          'Programming Language :: Python :: 3.9',
          'Programming Language :: Python :: 3.10',
          'Programming Language :: Python :: 3.11',
      ],
      install_requires=[
      'numpy',
      'scipy',
      'pyyaml',
      'networkx',
      'pandas>=1.5',
      'matplotlib>=3.3'
      ],
      extras_require={
      'test': ['pytest']
      },
      python_requires='>=3.8',
      entry_points={
          'console_scripts': ['fractal-nets=fractal_nets.cli:main'],
      },
)
