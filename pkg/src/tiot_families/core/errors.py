#
# SPDX-License-Identifier: MIT
#
# Copyright (c) 2024 The tiot-families authors.
#
# This file is part of tiot-families.
#
# This file is published using the MIT license.
# Refer to LICENSE for more information
#


class TiotError(Exception):
    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class InvalidElementsError(TiotError, ValueError):
    pass


class InvalidDesignError(TiotError, ValueError):
    pass


class KeplerConvergenceError(TiotError):
    def __init__(self, mean_anomaly: float, eccentricity: float) -> None:
        super().__init__(
            "Kepler's equation did not converge for "
            f"M={mean_anomaly!r}, e={eccentricity!r}"
        )
        self.mean_anomaly = mean_anomaly
        self.eccentricity = eccentricity


class PropagationError(TiotError):
    pass


class CollinearGeometryError(TiotError):
    def __init__(self, sin_theta: float, theta: float) -> None:
        super().__init__(
            f"Endpoints are collinear (|sin(theta)| = {sin_theta:.3e}, "
            f"theta={theta:.6f} rad); the transfer plane is undefined"
        )
        self.sin_theta = sin_theta
        self.theta = theta


class LambertConvergenceError(TiotError):
    pass


class NoParabolicConnectionError(TiotError):
    pass


class SingularSensitivityError(TiotError):
    def __init__(self, condition_number: float, theta: float) -> None:
        super().__init__(
            f"phi_rv is singular (cond={condition_number:.3e}, "
            f"theta={theta:.6f} rad)"
        )
        self.condition_number = condition_number
        self.theta = theta


class DegenerateBurnError(TiotError):
    def __init__(self, magnitude: float) -> None:
        super().__init__(
            f"Burn magnitude {magnitude:.3e} km/s has no defined direction"
        )
        self.magnitude = magnitude


class CorrectorError(TiotError):
    pass


class BifurcationError(TiotError):
    def __init__(self, singular_values: tuple[float, ...]) -> None:
        super().__init__(
            "Constraint Jacobian is rank deficient, possible bifurcation "
            f"(singular values {singular_values})"
        )
        self.singular_values = singular_values


class ScenarioError(TiotError, ValueError):
    pass


class StageError(TiotError):
    def __init__(self, stage: str, cause: BaseException) -> None:
        super().__init__(f"Stage '{stage}' failed: {cause}")
        self.stage = stage
        self.cause = cause
