"""Command line view context."""

from dataclasses import dataclass, field

from src.application.services.involutions import (
    InvolutionAppService,
    InvolutionLimits,
)
from src.application.services.lattice import LatticeAppService
from src.application.services.phase_timer import PhaseTimer
from src.domain.interfaces.random_source import IRandomSourceFactory
from src.domain.interfaces.repositories.file_system import IFileSystem
from src.infrastructure.random.splitmix import SplitMix64
from src.infrastructure.repositories.file_system.local_file_system import (
    LocalFileSystem,
)
from src.infrastructure.settings import settings


def involution_limits() -> InvolutionLimits:
    """Read the involution limits from the settings.

    Returns:
        InvolutionLimits: limits.

    """
    return InvolutionLimits(
        retry_limit=settings.retry_limit,
        frame_range=settings.frame_range,
        sample_range=settings.sample_range,
        interpolation_samples=settings.interpolation_samples,
        symbolic_degree_limit=settings.symbolic_degree_limit,
        pointwise_samples=settings.pointwise_samples,
    )


@dataclass(slots=True)
class ViewContext:
    """Services shared by the views of one command run."""

    file_system: IFileSystem = field(default_factory=LocalFileSystem)
    timer: PhaseTimer = field(default_factory=PhaseTimer)
    random_sources: IRandomSourceFactory = SplitMix64
    involutions: InvolutionAppService = field(init=False)
    lattices: LatticeAppService = field(init=False)

    def __post_init__(self) -> None:
        """Wire the application services to the shared timer."""
        self.involutions = InvolutionAppService(
            random_sources=self.random_sources,
            limits=involution_limits(),
            timer=self.timer,
        )
        self.lattices = LatticeAppService(timer=self.timer)
