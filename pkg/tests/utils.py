from hiddenqutrit.measurement import (CountRecord, probabilities,
                                      table1_settings)


def noiseless_records(rho, flux=1e9, settings=None):
    """Counts equal to the expected value (rounded), without Poisson noise."""
    if settings is None:
        settings = table1_settings()
    p = probabilities(rho, settings)
    return [CountRecord(s, int(round(flux * max(x, 0))), 1.)
            for s, x in zip(settings, p)]
