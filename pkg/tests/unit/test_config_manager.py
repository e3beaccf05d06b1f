"""Unit tests for configuration management functionality."""

import copy

import pytest
import yaml

from bspline_bbf.config import (
    DEFAULT_CONFIG,
    LOG_LEVEL_ENV,
    ConfigManager,
    ConfigTemplateManager,
    ConfigValidationError,
)


def write_config(path, data):
    with open(path, 'w', encoding='utf-8') as f:
        yaml.dump(data, f)
    return str(path)


@pytest.mark.unit
class TestConfigManager:
    """Test cases for ConfigManager."""

    def test_load_default_file(self):
        """Test loading the shipped default configuration."""
        manager = ConfigManager("config/default.yaml")
        config = manager.load_config()

        assert set(config) == set(DEFAULT_CONFIG)
        assert config['conversion']['default_method'] == "new"
        assert config['accuracy']['dyadic_bits'] == 24

    def test_default_file_matches_builtin_defaults(self):
        """Test that config/default.yaml and DEFAULT_CONFIG agree."""
        config = ConfigManager("config/default.yaml").load_config()
        assert config == DEFAULT_CONFIG

    def test_get_section(self):
        """Test getting specific configuration sections."""
        manager = ConfigManager("config/default.yaml")
        manager.load_config()

        verification = manager.get_section("verification")
        assert verification['samples_per_span'] == 100

        with pytest.raises(ConfigValidationError):
            manager.get_section("nonexistent")

    def test_env_overrides_log_level(self, monkeypatch):
        """Test that the environment variable wins over the file's log level."""
        monkeypatch.setenv(LOG_LEVEL_ENV, "debug")
        manager = ConfigManager("config/default.yaml")
        assert manager.get_config()['logging']['level'] == "DEBUG"

        monkeypatch.delenv(LOG_LEVEL_ENV)
        assert manager.get_config()['logging']['level'] == "WARNING"

    def test_missing_file(self):
        """Test configuration validation with missing file."""
        manager = ConfigManager("nonexistent.yaml")

        with pytest.raises(ConfigValidationError) as exc_info:
            manager.load_config()

        assert "not found" in str(exc_info.value.message)

    def test_implicit_default_falls_back_to_builtin(self, temp_dir, monkeypatch):
        """Test built-in defaults when no file was requested and none exists."""
        monkeypatch.chdir(temp_dir)
        monkeypatch.delenv(LOG_LEVEL_ENV)
        config = ConfigManager().load_or_default()
        assert config == DEFAULT_CONFIG

    def test_explicit_missing_file_is_an_error(self, temp_dir):
        """Test that an explicitly requested file must exist."""
        with pytest.raises(ConfigValidationError):
            ConfigManager(str(temp_dir / "absent.yaml")).load_or_default()

    def test_invalid_yaml(self, temp_dir):
        """Test configuration validation with invalid YAML."""
        path = temp_dir / "broken.yaml"
        path.write_text("invalid: yaml: content: [", encoding='utf-8')

        with pytest.raises(ConfigValidationError) as exc_info:
            ConfigManager(str(path)).load_config()

        assert "Invalid YAML syntax" in str(exc_info.value.message)

    def test_empty_file(self, temp_dir):
        """Test that an empty file is rejected."""
        path = temp_dir / "empty.yaml"
        path.write_text("", encoding='utf-8')

        with pytest.raises(ConfigValidationError, match="empty"):
            ConfigManager(str(path)).load_config()

    def test_missing_sections(self, temp_dir):
        """Test configuration validation with missing required sections."""
        path = write_config(temp_dir / "partial.yaml", {'logging': DEFAULT_CONFIG['logging']})

        with pytest.raises(ConfigValidationError) as exc_info:
            ConfigManager(path).load_config()

        assert "Missing required configuration section" in str(exc_info.value.message)
        assert exc_info.value.field_path == "conversion"

    def test_invalid_types(self, temp_dir):
        """Test configuration validation with invalid field types."""
        config_data = copy.deepcopy(DEFAULT_CONFIG)
        config_data['accuracy']['trials'] = "many"
        path = write_config(temp_dir / "types.yaml", config_data)

        with pytest.raises(ConfigValidationError) as exc_info:
            ConfigManager(path).load_config()

        assert "must be of type" in str(exc_info.value.message)
        assert exc_info.value.field_path == "accuracy.trials"

    def test_bool_is_not_an_integer(self, temp_dir):
        """Test that a boolean is rejected where a count is expected."""
        config_data = copy.deepcopy(DEFAULT_CONFIG)
        config_data['timing']['repetitions'] = True
        path = write_config(temp_dir / "bool.yaml", config_data)

        with pytest.raises(ConfigValidationError, match="must be of type int"):
            ConfigManager(path).load_config()

    @pytest.mark.parametrize("section, field, value, field_path", [
        ('conversion', 'default_method', 'fast', 'conversion.default_method'),
        ('logging', 'level', 'LOUD', 'logging.level'),
        ('verification', 'partition_tolerance', 0, 'verification.partition_tolerance'),
        ('verification', 'samples_per_span', 0, 'verification.samples_per_span'),
        ('accuracy', 'ms', [0, 3], 'accuracy.ms'),
        ('accuracy', 'ns', [], 'accuracy.ns'),
        ('accuracy', 'dyadic_bits', 60, 'accuracy.dyadic_bits'),
        ('accuracy', 'jobs', 0, 'accuracy.jobs'),
        ('timing', 'trials', 0, 'timing.trials'),
        ('timing', 'repetitions', 0, 'timing.repetitions'),
    ])
    def test_invalid_values(self, temp_dir, section, field, value, field_path):
        """Test range checks on individual fields."""
        config_data = copy.deepcopy(DEFAULT_CONFIG)
        config_data[section][field] = value
        path = write_config(temp_dir / "values.yaml", config_data)

        with pytest.raises(ConfigValidationError) as exc_info:
            ConfigManager(path).load_config()

        assert exc_info.value.field_path == field_path
        assert str(exc_info.value).startswith(f"Config '{field_path}' must be")

    def test_validate_config_file(self):
        """Test configuration file validation."""
        manager = ConfigManager()

        assert manager.validate_config_file("config/default.yaml") is True
        assert manager.validate_config_file("nonexistent.yaml") is False

    def test_returned_config_is_a_copy(self):
        """Test that callers cannot mutate the loaded configuration."""
        manager = ConfigManager("config/default.yaml")
        config = manager.load_config()
        config['accuracy']['ms'].append(99)
        assert 99 not in manager.get_section('accuracy')['ms']


@pytest.mark.unit
class TestConfigTemplateManager:
    """Test cases for ConfigTemplateManager."""

    def test_discover_templates(self):
        """Test template discovery."""
        template_manager = ConfigTemplateManager("config/templates")
        assert template_manager.list_templates() == ["desk", "full", "quick"]

    def test_get_template_path(self):
        """Test getting template path."""
        template_manager = ConfigTemplateManager("config/templates")

        assert template_manager.get_template_path("quick").name == "quick.yaml"
        assert template_manager.get_template_path("nonexistent") is None

    def test_templates_are_valid(self):
        """Test that every shipped template passes validation."""
        template_manager = ConfigTemplateManager("config/templates")
        for name in template_manager.list_templates():
            assert template_manager.validate_template(name), name
        assert not template_manager.validate_template("nonexistent")

    def test_copy_template(self, temp_dir):
        """Test copying a template, refusing to overwrite by default."""
        template_manager = ConfigTemplateManager("config/templates")
        destination = temp_dir / "nested" / "bbf.yaml"

        assert template_manager.copy_template("quick", str(destination))
        assert destination.exists()
        assert not template_manager.copy_template("quick", str(destination))
        assert template_manager.copy_template("full", str(destination), overwrite=True)
        assert ConfigManager(str(destination)).load_config()['accuracy']['jobs'] == 4

    def test_copy_unknown_template(self, temp_dir):
        """Test copying a template that does not exist."""
        template_manager = ConfigTemplateManager("config/templates")
        assert not template_manager.copy_template("nonexistent", str(temp_dir / "x.yaml"))

    def test_descriptions(self):
        """Test template descriptions."""
        template_manager = ConfigTemplateManager("config/templates")
        assert "Smoke-test" in template_manager.get_template_description("quick")
        assert template_manager.get_template_description("custom") == "Configuration template: custom"

    def test_missing_directory(self, temp_dir):
        """Test discovery in a directory that does not exist."""
        assert ConfigTemplateManager(str(temp_dir / "none")).list_templates() == []
