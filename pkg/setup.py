from setuptools import setup, find_packages

with open("requirements.txt") as f:
    required = f.read().splitlines()

setup(
   name = "mixscope",
   version = '0.3',
   packages = find_packages(exclude=["tests"]),
   scripts = ['mixscope_run.py'],
   install_requires=required,
   entry_points = {
      'console_scripts': ['mixscope = mixscope.Cli:main'],
   },
   test_suite = 'tests',
   author = 'mixscope developers',
   description = "Exact separation distance of statistics of shuffles and of the lazy walk on a colored cycle, "
                 "with strong stationary time certification by path enumeration.",
   license = "PSF",
   keywords = "markov chains, mixing time, separation distance, strong stationary times, card shuffling",
)
