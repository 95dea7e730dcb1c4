from setuptools import setup

setup(
    name='contextualextension',
    version='0.1.0',
    author='Tom Lever',
    packages=['contextualextension'],
    license='MIT License',
    description='A Python package constructing contextual extensions of finite-dimensional operator algebras',
    long_description=open('README.md').read(),
    install_requires=[
        'numpy',
        'pandas',
        'scipy',
        'networkx',
        'graphviz'
    ],
    entry_points={
        'console_scripts': [
            'contextualextension = contextualextension.CommandLineInterface:main'
        ]
    },
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.10'
    ]
)
