"""Configuration template management utilities."""

import logging
import shutil
from pathlib import Path
from typing import Dict, List, Optional

logger = logging.getLogger(__name__)

TEMPLATE_DESCRIPTIONS = {
    "desk": "Everyday settings: small experiment grids and default tolerances",
    "quick": "Smoke-test settings: few trials and a coarse sampling for verify",
    "full": "Full experiment grid: m up to 50, n up to 100 and many trials",
}


class ConfigTemplateManager:
    """Manages configuration templates and template generation."""

    def __init__(self, templates_dir: str = "config/templates"):
        """Initialize template manager.

        Args:
            templates_dir: Directory containing configuration templates
        """
        self.templates_dir = Path(templates_dir)
        self.available_templates = self._discover_templates()

    def _discover_templates(self) -> Dict[str, Path]:
        templates: Dict[str, Path] = {}

        if not self.templates_dir.exists():
            logger.warning(f"Templates directory not found: {self.templates_dir}")
            return templates

        for template_file in sorted(self.templates_dir.glob("*.yaml")):
            templates[template_file.stem] = template_file

        logger.debug(f"Discovered {len(templates)} configuration templates")
        return templates

    def list_templates(self) -> List[str]:
        return list(self.available_templates.keys())

    def get_template_path(self, template_name: str) -> Optional[Path]:
        return self.available_templates.get(template_name)

    def copy_template(self, template_name: str, destination: str, overwrite: bool = False) -> bool:
        """Copy a template to a destination path.

        Returns:
            True if successful, False otherwise
        """
        template_path = self.get_template_path(template_name)
        if not template_path:
            logger.error(f"Template '{template_name}' not found")
            return False

        dest_path = Path(destination)
        if dest_path.exists() and not overwrite:
            logger.error(f"Destination file already exists: {dest_path}")
            return False

        try:
            dest_path.parent.mkdir(parents=True, exist_ok=True)
            shutil.copy2(template_path, dest_path)
            logger.info(f"Copied template '{template_name}' to {dest_path}")
            return True
        except OSError as e:
            logger.error(f"Failed to copy template '{template_name}': {e}")
            return False

    def get_template_description(self, template_name: str) -> str:
        return TEMPLATE_DESCRIPTIONS.get(template_name, f"Configuration template: {template_name}")

    def validate_template(self, template_name: str) -> bool:
        template_path = self.get_template_path(template_name)
        if not template_path:
            return False

        # Import here to avoid circular imports
        from .manager import ConfigManager, ConfigValidationError

        try:
            ConfigManager(str(template_path)).load_config()
            return True
        except ConfigValidationError as e:
            logger.error(f"Template '{template_name}' validation failed: {e}")
            return False
