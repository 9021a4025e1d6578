"""Functions and classes for managing the parameters of sweeps and checks."""

import pickle

from .base.constants import (DEFAULT_TOL, DEFAULT_SEED, MP_DPS,
                             M_OMEGA_WINDOW, M_OMEGA_CAP, ROOT_TOL,
                             ROOT_MAX_STEPS, ROOT_EXTRA_PREC,
                             AMBIGUITY_FACTOR, MC_SAMPLES, MC_BATCH,
                             QUAD_LIMIT, QUAD_EPSABS, QUAD_EPSREL,
                             KERNEL_PAIRS, SIGN_GRID)


__all__ = ["Config", "read_config"]


class Config:
    """
    Class for representing the parameters of threshold sweeps and oracle
    verification.

    Attributes
    ----------
    generic['tol']: Fraction
        Width of refined threshold brackets. Default value: 1/10**9.
    generic['seed']: int
        Seed for random sampling. Default value: 1337.
    generic['mp_dps']: int
        Decimal digits of mpmath evaluations. Default value: 30.
    threshold['window']: int
        Number of further m checked by the m_Omega search when the
        coefficient certificate is missing. Default value: 8.
    threshold['m_cap']: int
        Largest m tried by the m_Omega search. Default value: 64.
    oracle['root_tol']: float
        Accepted relative residual of numeric roots. Default value: 1.0e-12.
    oracle['max_steps']: int
        Iteration cap of the numeric root finder. Default value: 400.
    oracle['extra_prec']: int
        Extra bits of working precision of the root finder.
        Default value: 40.
    oracle['ambiguity_factor']: float
        Roots within ambiguity_factor * root_tol of Re = 1/2 are not
        classified. Default value: 10.
    oracle['mc_samples']: int
        Number of Monte-Carlo samples of Hua integrals. Default value: 10**6.
    oracle['mc_batch']: int
        Number of samples drawn at once. Default value: 200000.
    oracle['quad_limit']: int
        Maximal number of quadrature subintervals. Default value: 200.
    oracle['quad_epsabs']: float
        Absolute error goal of quadrature. Default value: 1.0e-13.
    oracle['quad_epsrel']: float
        Relative error goal of quadrature. Default value: 1.0e-11.
    oracle['num_random_polys']: int
        Number of random polynomials with known roots compared against exact
        localization. Default value: 200.
    oracle['num_mu_samples']: int
        Number of mu drawn on each side of a threshold when decide() is
        compared with numeric roots. Default value: 4.
    kernel['num_pairs']: int
        Number of random point pairs of range lemma checks.
        Default value: 10**4.
    kernel['sign_grid']: int
        Number of grid points scanned for kernel sign changes.
        Default value: 400.
    table['types']: List[str]
        Base domains of the threshold table.
        Default value: ['I_{1,2}', 'I_{1,3}', 'IV_3', 'I_{1,4}', 'IV_4'].
    table['m_max']: int
        Largest fiber dimension of the table. Default value: 7.
    table['deviation_tol']: float
        Accepted deviation from printed values. Default value: 5.0e-5.
    table['closed_form_tol']: float
        Accepted deviation from closed forms. Default value: 1.0e-9.
    _legal_params: Dict[str, set]
        names of legal parameters, reserved for checking purposes.
        DO NOT CHANGE IT!
    """
    def __init__(self) -> None:
        self.generic = {'tol': DEFAULT_TOL,
                        'seed': DEFAULT_SEED,
                        'mp_dps': MP_DPS}

        self.threshold = {'window': M_OMEGA_WINDOW,
                          'm_cap': M_OMEGA_CAP}

        self.oracle = {'root_tol': ROOT_TOL,
                       'max_steps': ROOT_MAX_STEPS,
                       'extra_prec': ROOT_EXTRA_PREC,
                       'ambiguity_factor': AMBIGUITY_FACTOR,
                       'mc_samples': MC_SAMPLES,
                       'mc_batch': MC_BATCH,
                       'quad_limit': QUAD_LIMIT,
                       'quad_epsabs': QUAD_EPSABS,
                       'quad_epsrel': QUAD_EPSREL,
                       'num_random_polys': 200,
                       'num_mu_samples': 4}

        self.kernel = {'num_pairs': KERNEL_PAIRS,
                       'sign_grid': SIGN_GRID}

        self.table = {'types': ['I_{1,2}', 'I_{1,3}', 'IV_3', 'I_{1,4}',
                                'IV_4'],
                      'm_max': 7,
                      'deviation_tol': 5.0e-5,
                      'closed_form_tol': 1.0e-9}

        # Set legal parameter names
        self._legal_params = dict()
        self.set_legal_params()

    def set_legal_params(self) -> None:
        """
        Set up self._legal_params.

        :return: None
        """
        self._legal_params = {
            'generic': set(self.generic.keys()),
            'threshold': set(self.threshold.keys()),
            'oracle': set(self.oracle.keys()),
            'kernel': set(self.kernel.keys()),
            'table': set(self.table.keys())
        }

    def check_params(self) -> None:
        """
        Check the sanity of parameters.

        :return: None
        :raises ValueError: if illegal parameters are detected.
        """
        for attr_name, set_ref in self._legal_params.items():
            set_diff = set(getattr(self, attr_name).keys()).difference(set_ref)
            for key in sorted(set_diff):
                raise ValueError(f"Undefined parameter {key} in"
                                 f" config.{attr_name}")

    def save(self, filename: str) -> None:
        """
        Save the configuration to a .pkl file.

        :param filename: file name of the .pkl file
        :return: None
        """
        with open(filename, 'wb') as f:
            pickle.dump(self, f, pickle.HIGHEST_PROTOCOL)


def read_config(filename: str) -> Config:
    """
    Read configuration from a .pkl file.

    Groups missing from the file keep their default values.

    :param filename: file name of the .pkl file
    :return: config object read from file
    :raises ValueError: if the file contains undefined parameters
    """
    with open(filename, 'rb') as f:
        config_dict = pickle.load(f)
    config = Config()
    for group in ('generic', 'threshold', 'oracle', 'kernel', 'table'):
        getattr(config, group).update(getattr(config_dict, group, {}))
    config.check_params()
    return config
