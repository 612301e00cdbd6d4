from abc import ABC, abstractmethod


class CPsiCalibratorInterface(ABC):
    """
    Interface for providers of the constant C(psi).
    Defines how the assembly layer obtains the calibrated constant.
    """

    @abstractmethod
    def get_c_psi(self) -> float:
        """
        Return the calibrated constant C(psi).
        """
        pass
