from setuptools import find_packages, setup

readme = open('README.rst').read() + open('CHANGELOG.rst').read()

setup(
    name='isg_amalgam',
    version='0.1.0',
    description='Calculators for amalgams of inverse semigroups',
    long_description=readme,
    license='BSD',
    author='isg_amalgam developers',
    packages=find_packages(exclude=['tests']),
    install_requires=[
        'msgpack>=0.5',
        'cached-property',
        'numpy>=1.20',
        'sympy>=1.12',
        'pyparsing>=2.4',
        'pydantic>=2.0',
    ],
    extras_require={
        'tests': ['pytest>=3.0'],
    },
    entry_points={
        'console_scripts': ['isg-amalgam = isg_amalgam.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
