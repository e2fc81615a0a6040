from setuptools import setup, find_packages

def getreadme():
    with open('README.rst') as readme_file:
        return readme_file.read()

setup(name = 'naipm',
      version = '0.1.0',
      description = 'Non-Archimedean interior point solver for lexicographic multi-objective linear and quadratic programs.',
      long_description = getreadme(),
      classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics'
      ],
      keywords = [
        'interior point',
        'linear programming',
        'quadratic programming',
        'lexicographic optimization',
        'multi-objective',
        'non-Archimedean'
      ],
      packages = find_packages(exclude=['tests']),
      install_requires = [
        'DataModelDict',
        'numpy',
        'pandas',
      ],
      extras_require = {
        'test': ['pytest', 'scipy'],
      },
      entry_points = {
        'console_scripts': ['naipm=naipm.cli:console_main'],
      },
      package_data={'naipm.fixtures': ['*.json']},
      zip_safe = False)
