from setuptools import setup

tests_require = ['pytest>=6', 'pytest-cov', 'coverage']
install_requires = ['sympy>=1.6']


VERSION = '0.1.0'

setup(
    name="semifield",
    version=VERSION,
    description=("Decide equations of idempotent semifields and lattice-ordered groups"),
    license="BSD",
    packages=['semifield'],
    python_requires='>=3.8',
    tests_require=tests_require,
    install_requires=install_requires,
    extras_require={"test": tests_require},
    entry_points={'console_scripts': ['semifield=semifield.main:main']},
    classifiers=[
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Topic :: Software Development :: Libraries",
    ],
)
